// Acceptance battery: runs the twelve stated criteria at their stated
// orders and tolerances, printing exactly one PASS/FAIL line per
// criterion. Exit status 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <vector>

#include "ncalg/verify.hpp"

using namespace ncalg;

int main() {
    VerifyOptions opt;  // stated defaults: orders per criterion, 20000 samples
    struct Criterion {
        const char* label;
        CheckResult (*run)(const VerifyOptions&);
    };
    const std::vector<Criterion> criteria{
        {"criterion 1 (affine product identity, 15 shapes, t^30)",
         [](const VerifyOptions& o) { return check_affine_identity(o); }},
        {"criterion 2 (D(t) closed-form table)",
         [](const VerifyOptions& o) { return check_d_table(o); }},
        {"criterion 3 (Molien vs. Chebyshev diagonal, Z/2..Z/6, t^24)",
         [](const VerifyOptions& o) { return check_molien(o); }},
        {"criterion 4 (wild quiver brute oracle, h(A) t^6 / h(O(A)) t^5 / Anick defect)",
         [](const VerifyOptions& o) { return check_wild_oracles(o); }},
        {"criterion 5 (surface algebra vs. circ product, t^10 / t^8)",
         [](const VerifyOptions& o) { return check_surface_circ(o); }},
        {"criterion 6 (strongly free monomial catalog, t^12 / t^10)",
         [](const VerifyOptions& o) { return check_monomial_catalog(o); }},
        {"criterion 7 (partial preprojective oracle, t^5)",
         [](const VerifyOptions& o) { return check_partial_preprojective(o); }},
        {"criterion 8 (odd product identity, t^50)",
         [](const VerifyOptions& o) { return check_super_identity(o); }},
        {"criterion 9 (Haar trace moments, d=6, 20000 samples)",
         [](const VerifyOptions& o) { return check_ds_moments(o); }},
        {"criterion 10 (matrix integral stabilization, 3 sigma)",
         [](const VerifyOptions& o) { return check_matrix_integral(o); }},
        {"criterion 11 (property suites)",
         [](const VerifyOptions& o) { return check_properties(o); }},
        {"criterion 12 (q-plane dimensions, t^8)",
         [](const VerifyOptions& o) { return check_q_plane(o); }},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = c.run(opt);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << c.label << "  [" << ms << " ms]"
                  << (r.pass || r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all 12 criteria passed" : "acceptance: FAILURES above")
              << "\n";
    return all ? 0 : 1;
}
