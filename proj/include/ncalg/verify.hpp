#pragma once

// Data-driven verification battery shared by the CLI `verify` subcommand
// and the acceptance test binary: closed-form identities, brute-force
// oracle cross-checks, property suites, and the statistical Monte Carlo
// checks. Every check returns a CheckResult with a human-readable detail
// of the first discrepancy, if any.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/datum.hpp"
#include "ncalg/monomial.hpp"
#include "ncalg/prepro.hpp"
#include "ncalg/quiver.hpp"
#include "ncalg/randmat.hpp"
#include "ncalg/series.hpp"

namespace ncalg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int order = -1;                    // -1: use each check's default
    unsigned long long seed = 20240817ull;
    long samples = 20000;
    long path_cap = kDefaultPathCap;
    int det_bound = kDefaultDetBound;
};

namespace detail {

inline std::string show(const ZSeries& s, int upto = -1) {
    std::ostringstream os;
    int n = (upto < 0 || upto > s.order()) ? s.order() : upto;
    for (int r = 0; r <= n; ++r) {
        if (r) os << ",";
        os << s[r].get_str();
    }
    return os.str();
}

inline bool compare_series(const ZSeries& a, const ZSeries& b, const std::string& what,
                           std::string& detail) {
    int n = std::min(a.order(), b.order());
    for (int r = 0; r <= n; ++r)
        if (a[r] != b[r]) {
            detail = what + ": first discrepancy at t^" + std::to_string(r) + " (" +
                     a[r].get_str() + " vs " + b[r].get_str() + ")";
            return false;
        }
    return true;
}

inline bool compare_mat(const ZMatSeries& a, const ZMatSeries& b, const std::string& what,
                        std::string& detail) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!compare_series(a(i, j), b(i, j),
                                what + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                                detail))
                return false;
    return true;
}

} // namespace detail

// ---- Catalogs ----

inline std::vector<std::pair<std::string, Quiver>> catalog_affine_shapes() {
    std::vector<std::pair<std::string, Quiver>> v;
    for (int n = 1; n <= 7; ++n) v.emplace_back("A~" + std::to_string(n), affine_a(n));
    for (int n = 4; n <= 8; ++n) v.emplace_back("D~" + std::to_string(n), affine_d(n));
    for (int n = 6; n <= 8; ++n) v.emplace_back("E~" + std::to_string(n), affine_e(n));
    return v;
}

// Wild shapes for the oracle battery (preprojective datums).
inline std::vector<std::pair<std::string, Quiver>> catalog_wild_quivers() {
    std::vector<std::pair<std::string, Quiver>> v;
    v.emplace_back("one vertex, two loops", loop_quiver(2));
    {
        Quiver q;  // two vertices joined by three edges
        q.add_vertex("0");
        q.add_vertex("1");
        q.add_edge(0, 1);
        q.add_edge(0, 1);
        q.add_edge(0, 1);
        v.emplace_back("two vertices, three edges", q);
    }
    {
        Quiver q;  // triangle with one doubled side
        q.add_vertex("0");
        q.add_vertex("1");
        q.add_vertex("2");
        q.add_edge(0, 1);
        q.add_edge(1, 2);
        q.add_edge(2, 0);
        q.add_edge(0, 1);
        v.emplace_back("triangle with a doubled edge", q);
    }
    {
        Quiver q;  // star K_{1,5}
        q.add_vertex("c");
        for (int i = 0; i < 5; ++i) q.add_edge(0, q.add_vertex(std::to_string(i)));
        v.emplace_back("star K_{1,5}", q);
    }
    {
        Quiver q;  // edge plus a loop
        q.add_vertex("0");
        q.add_vertex("1");
        q.add_edge(0, 1);
        q.add_edge(0, 0);
        v.emplace_back("edge plus loop", q);
    }
    return v;
}

inline std::vector<std::pair<std::string, MonomialPresentation>> catalog_monomials() {
    std::vector<std::pair<std::string, MonomialPresentation>> v;
    std::vector<Letter> xy{{"x", 1}, {"y", 1}};
    v.emplace_back("{xy}", make_monomial(xy, {{"x", "y"}}));
    v.emplace_back("{xxyy}", make_monomial(xy, {{"x", "x", "y", "y"}}));
    v.emplace_back("{xxyy, xyxyy}",
                   make_monomial(xy, {{"x", "x", "y", "y"}, {"x", "y", "x", "y", "y"}}));
    v.emplace_back("{xxxy}", make_monomial(xy, {{"x", "x", "x", "y"}}));
    return v;
}

// Deterministic random strongly free sets: 2 degree-1 letters, word
// lengths <= 6, 1..3 words, rejection-sampled.
inline std::vector<std::pair<std::string, MonomialPresentation>>
random_strongly_free_sets(int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, MonomialPresentation>> out;
    std::vector<Letter> xy{{"x", 1}, {"y", 1}};
    while (static_cast<int>(out.size()) < count) {
        int words = 1 + static_cast<int>(rng() % 3);
        MonomialPresentation p;
        p.alphabet = xy;
        for (int w = 0; w < words; ++w) {
            int len = 2 + static_cast<int>(rng() % 5);  // 2..6
            Word word;
            for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % 2));
            p.relations.push_back(std::move(word));
        }
        if (!strongly_free(p)) continue;
        std::string name = "random{";
        for (size_t i = 0; i < p.relations.size(); ++i) {
            if (i) name += ",";
            for (int a : p.relations[i]) name += p.alphabet[static_cast<size_t>(a)].name;
        }
        name += "}";
        out.emplace_back(std::move(name), std::move(p));
    }
    return out;
}

// One-vertex datum of a monomial presentation: V from the alphabet, L one
// dimension per relation word, m = 0 (strongly free sets have no cyclic
// relation part).
inline VLDatum monomial_datum(const MonomialPresentation& p, int order) {
    VLDatum d = VLDatum::empty(1, order);
    for (const Letter& l : p.alphabet)
        if (l.degree <= order) ++d.dimsV[0][0][static_cast<size_t>(l.degree)];
    for (const Word& w : p.relations) {
        int r = p.weight_of(w);
        if (r <= order) ++d.dimsL[0][0][static_cast<size_t>(r)];
    }
    return d;
}

// ---- Criterion 1: the affine product identity ----

inline CheckResult check_affine_identity(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 30;
    CheckResult res{"affine product identity to t^" + std::to_string(order), true, ""};
    for (const auto& [name, q] : catalog_affine_shapes()) {
        AffineIdentityReport rep = affine_identity_check(q, order, opt.det_bound);
        if (!rep.equal) {
            res.pass = false;
            res.detail = name + ": sides differ first at t^" + std::to_string(rep.first_diff);
            return res;
        }
    }
    res.detail = "15 affine shapes, all extending vertices";
    return res;
}

// ---- Criterion 2: the D(t) closed-form table ----

inline CheckResult check_d_table(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 30;
    CheckResult res{"D(t) closed-form table", true, ""};
    for (const auto& [name, q] : catalog_affine_shapes()) {
        DPolynomialPair p = dynkin_D_polynomial(q, order, opt.det_bound);
        if (!detail::compare_series(p.computed, p.closed, name, res.detail)) {
            res.pass = false;
            return res;
        }
    }
    res.detail = "15 affine shapes, exact polynomial equality";
    return res;
}

// ---- Criterion 3: Molien series vs. Chebyshev diagonal ----

inline CheckResult check_molien(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 24;
    CheckResult res{"Molien series = Chebyshev diagonal (cyclic groups) to t^" +
                        std::to_string(order),
                    true, ""};
    for (int n = 2; n <= 6; ++n) {
        ZSeries molien = molien_series(cyclic_subgroup_sl2(n), order);
        AdjacencyMatrix c = adjacency(double_quiver(affine_a(n - 1)));
        ChebyshevTable cheb = chebyshev(c, order);
        ZSeries rhs(order);
        for (int k = 0; k <= order; ++k) rhs.at(k) = cheb.kind2[static_cast<size_t>(k)][0][0];
        if (!detail::compare_series(molien, rhs, "Z/" + std::to_string(n), res.detail)) {
            res.pass = false;
            return res;
        }
    }
    res.detail = "Z/2..Z/6";
    return res;
}

// ---- Criterion 4: wild-quiver oracle battery ----

inline CheckResult check_wild_oracles(const VerifyOptions& opt = {}) {
    const int order_a = opt.order > 0 ? opt.order : 6;
    const int order_o = std::min(order_a, 5);
    CheckResult res{"wild preprojective: closed forms vs. brute oracle", true, ""};
    for (const auto& [name, q] : catalog_wild_quivers()) {
        PreprojectiveData pd = preprojective_datum(q, order_a);
        ZMatSeries hA = hilbert_A(pd.datum);
        GradedDims brute = brute_algebra_dims(pd.presentation, order_a, opt.path_cap);
        if (!detail::compare_mat(hA, brute.per_entry, name + " h(A)", res.detail)) {
            res.pass = false;
            return res;
        }
        ZSeries cyc = brute_cyclic_dims(pd.presentation, order_o, opt.path_cap);
        ZSeries hOA = hilbert_OA(pd.datum, opt.det_bound).truncate(order_o);
        if (!detail::compare_series(hOA, sym_exp(cyc), name + " h(O(A))", res.detail)) {
            res.pass = false;
            return res;
        }
        ZMatSeries defect = anick_defect(brute.per_entry, hilbert_V(pd.datum), hilbert_L(pd.datum));
        if (!defect.is_zero()) {
            res.pass = false;
            res.detail = name + ": Anick defect nonzero to t^" + std::to_string(order_a);
            return res;
        }
    }
    res.detail = "5 wild shapes: h(A) to t^" + std::to_string(order_a) + ", h(O(A)) to t^" +
                 std::to_string(order_o) + ", Anick defect = 0";
    return res;
}

// ---- Criterion 5: surface series vs. circ product ----

inline CheckResult check_surface_circ(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 10;
    const int order_o = std::min(order, 8);
    CheckResult res{"genus-2 surface algebra vs. circ product", true, ""};
    SurfaceSeries target = a_g_n_series(2, 2, order);
    ZMatSeries hV(1, order), hL(1, order), hD(1, order);
    hV(0, 0) = ZSeries::monomial(order, 1, Int(4));
    hL(0, 0) = ZSeries::monomial(order, 2, Int(1));
    hD(0, 0) = truncated_poly_hilbert(2, order);
    ZMatSeries circ = circ_product_hilbert(hV, hL, hD);
    if (!detail::compare_series(target.hA, circ(0, 0), "h(A_{2,2})", res.detail)) {
        res.pass = false;
        return res;
    }
    ZSeries circ_o = circ_product_OA(hV, hL, hD, truncated_poly_moduli(2, order), {},
                                     opt.det_bound);
    if (!detail::compare_series(target.hOA.truncate(order_o), circ_o.truncate(order_o),
                                "h(O(A_{2,2}))", res.detail)) {
        res.pass = false;
        return res;
    }
    res.detail = "h(A) to t^" + std::to_string(order) + ", h(O(A)) to t^" + std::to_string(order_o);
    return res;
}

// ---- Criterion 6: monomial catalog vs. closed forms ----

inline CheckResult check_monomial_catalog(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 12;
    const int order_c = std::min(order, 10);
    CheckResult res{"strongly free monomial sets vs. closed forms", true, ""};
    auto sets = catalog_monomials();
    for (auto& s : random_strongly_free_sets(5, opt.seed)) sets.push_back(std::move(s));
    for (const auto& [name, p] : sets) {
        if (!strongly_free(p)) {
            res.pass = false;
            res.detail = name + ": not strongly free";
            return res;
        }
        VLDatum d = monomial_datum(p, order);
        ZSeries closed = hilbert_A(d)(0, 0);
        if (!detail::compare_series(count_normal_words(p, order), closed, name + " normal words",
                                    res.detail)) {
            res.pass = false;
            return res;
        }
        VLDatum dc = monomial_datum(p, order_c);
        if (!detail::compare_series(sym_exp(count_cyclic_avoiding(p, order_c)),
                                    zeta(dc, opt.det_bound), name + " cyclic words", res.detail)) {
            res.pass = false;
            return res;
        }
    }
    res.detail = std::to_string(sets.size()) + " sets (4 catalog + 5 random)";
    return res;
}

// ---- Criterion 7: partial preprojective oracle ----

inline CheckResult check_partial_preprojective(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 5;
    CheckResult res{"partial preprojective: formula vs. brute oracle", true, ""};
    std::vector<std::pair<std::string, std::pair<Quiver, std::vector<int>>>> cases;
    cases.emplace_back("A2, J={1}", std::make_pair(path_quiver(2), std::vector<int>{1}));
    cases.emplace_back("3-path, J={middle}", std::make_pair(path_quiver(3), std::vector<int>{1}));
    for (const auto& [name, qa] : cases) {
        const auto& [q, j] = qa;
        PartialPreprojectiveHilbert ph = partial_preprojective(q, j, order, opt.det_bound);
        Presentation pr = partial_preprojective_presentation(q, j);
        GradedDims brute = brute_algebra_dims(pr, order, opt.path_cap);
        if (!detail::compare_mat(ph.h, brute.per_entry, name + " h", res.detail)) {
            res.pass = false;
            return res;
        }
        ZSeries lc = compute_L_circ(pr, order, opt.path_cap);
        if (!lc.is_zero()) {
            res.pass = false;
            res.detail = name + ": cyclic relation part is nonzero";
            return res;
        }
        ZSeries cyc = brute_cyclic_dims(pr, order, opt.path_cap);
        if (!detail::compare_series(ph.hO, sym_exp(cyc), name + " hO", res.detail)) {
            res.pass = false;
            return res;
        }
    }
    res.detail = "formula = oracle to t^" + std::to_string(order) + ", L-circ = 0";
    return res;
}

// ---- Criterion 8: the odd-variable product identity ----

inline CheckResult check_super_identity(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 50;
    CheckResult res{"odd product identity to t^" + std::to_string(order), true, ""};
    // lhs = prod_{k odd} (1 - t^k) = sym_exp of minus the odd indicator.
    ZSeries odd(order);
    for (int k = 1; k <= order; k += 2) odd.at(k) = -1;
    ZSeries lhs = sym_exp(odd);
    // rhs = prod_k (1 + t^k)^{-1}; check lhs * rhs^{-1} = 1.
    ZSeries rhs_inv = ZSeries::one(order);  // prod (1 + t^k)
    for (int k = 1; k <= order; ++k)
        rhs_inv *= ZSeries::one_minus_tk(order, 2 * k) * ZSeries::one_minus_tk(order, k).inverse();
    if (!detail::compare_series(lhs * rhs_inv, ZSeries::one(order), "product", res.detail))
        res.pass = false;
    else
        res.detail = "(1-t)(1-t^3)... x (1+t)(1+t^2)... = 1";
    return res;
}

// ---- Criterion 9: trace moment tests ----

inline CheckResult check_ds_moments(const VerifyOptions& opt = {}) {
    CheckResult res{"Haar trace moments (d=6)", true, ""};
    const int d = 6;
    struct Row {
        std::vector<MomentFactor> f;
        double lo, hi;
        const char* what;
    };
    std::vector<Row> rows{
        {{{1, 1, 1}}, 0.9, 1.1, "E|Tr u|^2"},
        {{{2, 1, 1}}, 1.8, 2.2, "E|Tr u^2|^2"},
        {{{1, 1, 0}, {2, 0, 1}}, -0.1, 0.1, "E[Tr u conj Tr u^2]"},
    };
    std::ostringstream os;
    for (const Row& row : rows) {
        MCEstimate e = ds_moment(d, row.f, opt.samples, opt.seed);
        os << row.what << "=" << e.mean[0] << "+-" << e.stderr_[0] << " ";
        if (e.mean[0] < row.lo || e.mean[0] > row.hi) {
            res.pass = false;
            res.detail = std::string(row.what) + " = " + std::to_string(e.mean[0]) +
                         " outside [" + std::to_string(row.lo) + "," + std::to_string(row.hi) + "]";
            return res;
        }
    }
    res.detail = os.str();
    return res;
}

// ---- Criterion 10: matrix-integral stabilization ----

inline CheckResult check_matrix_integral(const VerifyOptions& opt = {}) {
    CheckResult res{"matrix integral stabilization", true, ""};
    auto band = [](double mean, double se, double target) {
        double tol = std::max(3.0 * se, 0.05);
        return std::abs(mean - target) <= tol;
    };
    {
        VLDatum d = VLDatum::empty(1, 4);
        d.dimsV[0][0][1] = 1;  // free algebra on one generator
        MCEstimate e = mc_matrix_integral(d, {8}, 4, opt.samples, opt.seed);
        const double target[] = {1, 1, 2, 3, 5};
        for (int r = 0; r <= 4; ++r)
            if (!band(e.mean[static_cast<size_t>(r)], e.stderr_[static_cast<size_t>(r)], target[r])) {
                res.pass = false;
                res.detail = "free algebra: coeff t^" + std::to_string(r) + " = " +
                             std::to_string(e.mean[static_cast<size_t>(r)]) + " not within band of " +
                             std::to_string(target[r]);
                return res;
            }
    }
    {
        PreprojectiveData pd = preprojective_datum(loop_quiver(2), 2);
        MCEstimate e = mc_matrix_integral(pd.datum, {10}, 2, opt.samples, opt.seed + 1);
        // I / lambda with lambda = 1 - t^2: divide the mean series.
        double c0 = e.mean[0], c1 = e.mean[1], c2 = e.mean[2] + c0;
        double s0 = e.stderr_[0], s1 = e.stderr_[1], s2 = e.stderr_[2] + s0;
        const double target[] = {1, 4, 20};
        const double mean[] = {c0, c1, c2};
        const double se[] = {s0, s1, s2};
        for (int r = 0; r <= 2; ++r)
            if (!band(mean[r], se[r], target[r])) {
                res.pass = false;
                res.detail = "preprojective 2-loop: coeff t^" + std::to_string(r) + " = " +
                             std::to_string(mean[r]) + " not within band of " +
                             std::to_string(target[r]);
                return res;
            }
    }
    res.detail = "free algebra (1,1,2,3,5) and preprojective 2-loop (1,4,20), 3 sigma bands";
    return res;
}

// ---- Criterion 11: property suites ----

inline CheckResult check_properties(const VerifyOptions& opt = {}) {
    CheckResult res{"property suites", true, ""};
    std::mt19937_64 rng(opt.seed);
    auto rand_small = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
    };

    // sym_log(sym_exp(f)) = f on 200 random integer series.
    for (int trial = 0; trial < 200; ++trial) {
        int order = rand_small(4, 12);
        ZSeries f(order);
        for (int r = 1; r <= order; ++r) f.at(r) = rand_small(-5, 5);
        ZSeries back = sym_log(sym_exp(f));
        if (!(back == f)) {
            res.pass = false;
            res.detail = "sym_log(sym_exp) failed on trial " + std::to_string(trial);
            return res;
        }
    }

    // Two-sided inverse on 100 random Cartan-shaped matrices.
    for (int trial = 0; trial < 100; ++trial) {
        int dim = rand_small(1, 4), order = rand_small(3, 8);
        ZMatSeries m = ZMatSeries::identity(dim, order);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int r = 1; r <= order; ++r) m(i, j).at(r) = rand_small(-3, 3);
        ZMatSeries inv = m.inverse();
        if (!(m * inv).is_identity() || !(inv * m).is_identity()) {
            res.pass = false;
            res.detail = "matrix inverse failed on trial " + std::to_string(trial);
            return res;
        }
    }

    // det multiplicativity on 100 random pairs.
    for (int trial = 0; trial < 100; ++trial) {
        int dim = rand_small(1, 3), order = rand_small(3, 6);
        auto rand_mat = [&]() {
            ZMatSeries m(dim, order);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    for (int r = 0; r <= order; ++r) m(i, j).at(r) = rand_small(-3, 3);
            return m;
        };
        ZMatSeries a = rand_mat(), b = rand_mat();
        if (!((a * b).det(opt.det_bound) == a.det(opt.det_bound) * b.det(opt.det_bound))) {
            res.pass = false;
            res.detail = "det multiplicativity failed on trial " + std::to_string(trial);
            return res;
        }
    }

    // Euler identity on every catalog datum.
    auto euler = [&](const VLDatum& d, const std::string& name) {
        HochschildSeries hh = hochschild_series(d, opt.det_bound);
        ZSeries lhs(d.order);
        lhs.at(0) = d.num_vertices;
        lhs = lhs - hh.hh0 + hh.hh1 - hh.hh2;
        if (!lhs.is_zero()) {
            res.pass = false;
            res.detail = name + ": Euler identity violated";
            return false;
        }
        return true;
    };
    for (const auto& [name, q] : catalog_wild_quivers())
        if (!euler(preprojective_datum(q, 8).datum, name)) return res;
    for (const auto& [name, p] : catalog_monomials())
        if (!euler(monomial_datum(p, 8), name)) return res;

    res.detail = "200 sym_log/sym_exp, 100 inverses, 100 det pairs, Euler identity on catalog";
    return res;
}

// ---- Criterion 12: the q-plane oracle ----

inline CheckResult check_q_plane(const VerifyOptions& opt = {}) {
    const int order = opt.order > 0 ? opt.order : 8;
    CheckResult res{"q-deformed plane (q=2) dimensions", true, ""};
    Quiver q = loop_quiver(2);  // loops x = e0, y = e1
    Presentation pr{q, {}};
    NCPoly rel;
    rel.tail = rel.head = 0;
    rel.weight = 2;
    rel.terms.emplace_back(Rat(1), std::vector<int>{0, 1});
    rel.terms.emplace_back(Rat(-2), std::vector<int>{1, 0});
    pr.relations.push_back(rel);
    GradedDims brute = brute_algebra_dims(pr, order, opt.path_cap);
    ZSeries expect(order);
    for (int r = 0; r <= order; ++r) expect.at(r) = r + 1;  // 1/(1-t)^2
    if (!detail::compare_series(brute.total, expect, "dim C_q[x,y]", res.detail))
        res.pass = false;
    else
        res.detail = "dims 1,2,3,... to t^" + std::to_string(order);
    return res;
}

// ---- Suites ----

inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt = {}) {
    std::vector<CheckResult> out;
    auto in = [&](std::initializer_list<const char*> names) {
        if (suite == "all") return true;
        for (const char* n : names)
            if (suite == n) return true;
        return false;
    };
    if (in({"affine"})) {
        out.push_back(check_affine_identity(opt));
        out.push_back(check_d_table(opt));
    }
    if (in({"molien"})) out.push_back(check_molien(opt));
    if (in({"oracle"})) {
        out.push_back(check_wild_oracles(opt));
        out.push_back(check_partial_preprojective(opt));
        out.push_back(check_q_plane(opt));
    }
    if (in({"surface"})) out.push_back(check_surface_circ(opt));
    if (in({"monomial"})) out.push_back(check_monomial_catalog(opt));
    if (in({"super"})) out.push_back(check_super_identity(opt));
    if (in({"props"})) out.push_back(check_properties(opt));
    if (in({"mc"})) {
        out.push_back(check_ds_moments(opt));
        out.push_back(check_matrix_integral(opt));
    }
    if (out.empty())
        throw std::invalid_argument(
            "unknown suite '" + suite +
            "' (expected one of: all, affine, molien, oracle, surface, monomial, super, props, mc)");
    return out;
}

} // namespace ncalg
