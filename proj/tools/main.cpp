// ncalg command-line front end: hilbert (series tables from a datum file),
// verify (identity and oracle suites), mc (Monte Carlo matrix integrals).
// Exit codes: 0 = success, 1 = verification/statistical failure,
// 2 = input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ncalg/json_io.hpp"
#include "ncalg/randmat.hpp"
#include "ncalg/verify.hpp"

namespace {

using namespace ncalg;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

// A datum file is one of: a raw datum ({"vertices": ...}), a presentation
// ({"quiver": ..., "relations": ...}), a preprojective shortcut
// ({"quiver": ..., "preprojective": true}), or a monomial presentation
// ({"alphabet": ...}).
VLDatum load_datum(const Json& j, int order, long path_cap) {
    if (j.contains("vertices") && !j.contains("edges")) return datum_from_json(j, order);
    if (j.contains("alphabet")) return monomial_datum(monomial_from_json(j), order);
    if (j.contains("quiver")) {
        if (j.value("preprojective", false))
            return preprojective_datum(quiver_from_json(j.at("quiver")), order).datum;
        return datum_from_presentation(presentation_from_json(j), order, path_cap);
    }
    throw std::invalid_argument("unrecognized datum file layout");
}

std::string series_csv(const ZSeries& s) {
    std::ostringstream os;
    for (int r = 0; r <= s.order(); ++r) {
        if (r) os << ",";
        os << s[r].get_str();
    }
    return os.str();
}

int cmd_hilbert(const std::string& path, int order, const std::string& format, long path_cap,
                int det_bound) {
    VLDatum d = load_datum(load_json(path), order, path_cap);
    ZMatSeries hA = hilbert_A(d);
    ZSeries total(order);
    for (int i = 0; i < d.num_vertices; ++i)
        for (int j = 0; j < d.num_vertices; ++j) total += hA(i, j);
    ZSeries hOA = hilbert_OA(d, det_bound);
    HochschildSeries hh = hochschild_series(d, det_bound);
    if (format == "json") {
        Json out{{"command", "hilbert"},
                 {"order", order},
                 {"hilbert_A", mat_series_to_json(hA)},
                 {"hilbert_A_total", series_to_json(total)},
                 {"hilbert_OA", series_to_json(hOA)},
                 {"hochschild",
                  Json{{"hh0", series_to_json(hh.hh0)},
                       {"hh1", series_to_json(hh.hh1)},
                       {"hh2", series_to_json(hh.hh2)}}}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "series,coefficients\n";
        std::cout << "hilbert_A_total," << series_csv(total) << "\n";
        std::cout << "hilbert_OA," << series_csv(hOA) << "\n";
        std::cout << "hh0," << series_csv(hh.hh0) << "\n";
        std::cout << "hh1," << series_csv(hh.hh1) << "\n";
        std::cout << "hh2," << series_csv(hh.hh2) << "\n";
    } else {
        std::cout << "h(A) total:   " << series_csv(total) << "\n";
        for (int i = 0; i < d.num_vertices; ++i)
            for (int j = 0; j < d.num_vertices; ++j)
                std::cout << "h(A)[" << i << "," << j << "]:    " << series_csv(hA(i, j)) << "\n";
        std::cout << "h(O(A)):      " << series_csv(hOA) << "\n";
        std::cout << "hh0:          " << series_csv(hh.hh0) << "\n";
        std::cout << "hh1:          " << series_csv(hh.hh1) << "\n";
        std::cout << "hh2:          " << series_csv(hh.hh2) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& format) {
    std::vector<CheckResult> results = run_suite(suite, opt);
    bool all = true;
    for (const CheckResult& r : results) all = all && r.pass;
    if (format == "json") {
        Json arr = Json::array();
        for (const CheckResult& r : results)
            arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        Json out{{"command", "verify"}, {"suite", suite}, {"pass", all}, {"checks", arr}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results)
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_mc(const std::string& path, std::vector<int> dims, int order, long samples,
           unsigned long long seed, const std::string& format, long path_cap, int det_bound) {
    VLDatum d = load_datum(load_json(path), order, path_cap);
    if (dims.empty()) throw std::invalid_argument("--dims is required");
    if (static_cast<int>(dims.size()) == 1 && d.num_vertices > 1)
        dims.assign(static_cast<size_t>(d.num_vertices), dims[0]);
    MCEstimate est = mc_matrix_integral(d, dims, order, samples, seed);
    ZSeries target = zeta(d, det_bound);
    bool all = true;
    std::vector<bool> pass;
    for (int r = 0; r <= order; ++r) {
        double t = target[r].get_d();
        double tol = std::max(3.0 * est.stderr_[static_cast<size_t>(r)], 0.05);
        bool ok = std::abs(est.mean[static_cast<size_t>(r)] - t) <= tol;
        pass.push_back(ok);
        all = all && ok;
    }
    if (format == "json") {
        Json out{{"command", "mc"},  {"order", order},       {"samples", samples},
                 {"seed", seed},     {"dims", dims},         {"mean", est.mean},
                 {"stderr", est.stderr_}, {"imag_max", est.imag_max},
                 {"target_zeta", series_to_json(target)},
                 {"pass", pass},     {"all_pass", all}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "coeff  mean           stderr         target(zeta)  verdict\n";
        for (int r = 0; r <= order; ++r)
            std::cout << "t^" << r << "    " << est.mean[static_cast<size_t>(r)] << "  "
                      << est.stderr_[static_cast<size_t>(r)] << "  " << target[r].get_str() << "  "
                      << (pass[static_cast<size_t>(r)] ? "ok" : "OFF") << "\n";
        std::cout << "max imaginary part of means: " << est.imag_max << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncalg: exact Hilbert series of presented graded algebras, "
                 "identity verification, and Monte Carlo matrix integrals"};
    app.require_subcommand(1);

    std::string datum_path, format = "text", suite = "all";
    int order = -1;  // per-command default chosen after parsing
    long samples = 20000;
    unsigned long long seed = 20240817ull;
    long path_cap = ncalg::kDefaultPathCap;
    int det_bound = ncalg::kDefaultDetBound;
    std::vector<int> dims;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", order, "truncation order N");
        cmd->add_option("--format", format, "output format: text, json, csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--path-cap", path_cap, "path enumeration cap");
        cmd->add_option("--det-bound", det_bound, "max matrix dimension for determinants");
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "series tables from a datum file");
    hilbert->add_option("--datum", datum_path, "datum / presentation JSON file")->required();
    add_common(hilbert);

    CLI::App* verify = app.add_subcommand("verify", "run identity and oracle suites");
    verify->add_option("--suite", suite,
                       "suite: all, affine, molien, oracle, surface, monomial, super, props, mc");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--samples", samples, "Monte Carlo sample count");
    add_common(verify);

    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo matrix integral for a datum");
    mc->add_option("--datum", datum_path, "datum / presentation JSON file")->required();
    mc->add_option("--dims", dims, "unitary dimension per vertex (repeat or single value)")
        ->required();
    mc->add_option("--samples", samples, "sample count");
    mc->add_option("--seed", seed, "master seed");
    add_common(mc);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hilbert->parsed()) {
            if (order < 0) order = 10;
            return cmd_hilbert(datum_path, order, format, path_cap, det_bound);
        }
        if (verify->parsed()) {
            ncalg::VerifyOptions opt;
            opt.order = order;
            opt.seed = seed;
            opt.samples = samples;
            opt.path_cap = path_cap;
            opt.det_bound = det_bound;
            return cmd_verify(suite, opt, format);
        }
        if (mc->parsed()) {
            if (order < 0) order = 4;
            return cmd_mc(datum_path, dims, order, samples, seed, format, path_cap, det_bound);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
