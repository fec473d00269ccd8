#pragma once

// The (V, L) datum of a presented algebra and the closed-form series built
// from it: the Cartan polynomial 1 - h(V) + h(L), the Hilbert series of A
// and of the commutative moduli algebra O(A), the lambda factor of the
// cyclic relation space, the zeta product, Hochschild dimension series,
// and the free / circ product formulas.

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/mat_series.hpp"
#include "ncalg/quiver.hpp"
#include "ncalg/series.hpp"

namespace ncalg {

struct VLDatum {
    int num_vertices = 0;
    int order = 0;
    // dims[i][j][r] for 0 <= r <= order; signed (super) dimensions.
    std::vector<std::vector<std::vector<long>>> dimsV;
    std::vector<std::vector<std::vector<long>>> dimsL;
    std::vector<long> m;  // m[r] = dim of the cyclic part of L in weight r

    static VLDatum empty(int vertices, int order) {
        VLDatum d;
        d.num_vertices = vertices;
        d.order = order;
        auto zero = std::vector<std::vector<std::vector<long>>>(
            static_cast<size_t>(vertices),
            std::vector<std::vector<long>>(static_cast<size_t>(vertices),
                                           std::vector<long>(static_cast<size_t>(order) + 1, 0)));
        d.dimsV = zero;
        d.dimsL = zero;
        d.m.assign(static_cast<size_t>(order) + 1, 0);
        return d;
    }

    void validate() const {
        auto check = [&](const auto& dims, const char* what) {
            if (static_cast<int>(dims.size()) != num_vertices)
                throw std::invalid_argument(std::string("datum: bad ") + what + " shape");
            for (const auto& row : dims) {
                if (static_cast<int>(row.size()) != num_vertices)
                    throw std::invalid_argument(std::string("datum: bad ") + what + " shape");
                for (const auto& col : row) {
                    if (static_cast<int>(col.size()) != order + 1)
                        throw std::invalid_argument(std::string("datum: bad ") + what + " order");
                    if (col[0] != 0)
                        throw std::invalid_argument(std::string("datum: ") + what +
                                                    " must vanish in weight 0");
                }
            }
        };
        check(dimsV, "V");
        check(dimsL, "L");
        if (static_cast<int>(m.size()) != order + 1 || m[0] != 0)
            throw std::invalid_argument("datum: bad m vector");
    }
};

inline ZMatSeries dims_to_series(const std::vector<std::vector<std::vector<long>>>& dims,
                                 int order) {
    const int n = static_cast<int>(dims.size());
    ZMatSeries h(n, order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r <= order; ++r) h(i, j).at(r) = dims[i][j][static_cast<size_t>(r)];
    return h;
}

inline ZMatSeries hilbert_V(const VLDatum& d) { return dims_to_series(d.dimsV, d.order); }
inline ZMatSeries hilbert_L(const VLDatum& d) { return dims_to_series(d.dimsL, d.order); }

// 1 - h(V) + h(L)
inline ZMatSeries cartan_poly(const VLDatum& d) {
    return ZMatSeries::identity(d.num_vertices, d.order) - hilbert_V(d) + hilbert_L(d);
}

// h(A) = (1 - h(V) + h(L))^{-1}: the complete-intersection prediction.
inline ZMatSeries hilbert_A(const VLDatum& d) { return cartan_poly(d).inverse(); }

// lambda(L-circ) = prod_r (1 - t^r)^{m_r}
inline ZSeries lambda_poly(const VLDatum& d) {
    ZSeries neg(d.order);
    for (int r = 1; r <= d.order; ++r) neg.at(r) = -d.m[static_cast<size_t>(r)];
    return sym_exp(neg);
}

// zeta(V, L) = prod_{s>=1} 1/det(1 - h(V; t^s) + h(L; t^s))
inline ZSeries zeta(const VLDatum& d, int det_bound = kDefaultDetBound) {
    return infinite_product_zeta(cartan_poly(d), det_bound);
}

// h(O(A)) = zeta / lambda
inline ZSeries hilbert_OA(const VLDatum& d, int det_bound = kDefaultDetBound) {
    return zeta(d, det_bound) * lambda_poly(d).inverse();
}

struct HochschildSeries {
    ZSeries hh0, hh1, hh2;
};

// Predicted Hochschild dimension series for an NCCI: HH2 has dimension m_r
// in weight r, HH0 is |I| in weight 0 plus the cyclic space of A, and HH1
// closes the Euler identity |I| - hh0 + hh1 - hh2 = 0.
inline HochschildSeries hochschild_series(const VLDatum& d, int det_bound = kDefaultDetBound) {
    HochschildSeries h{ZSeries(d.order), ZSeries(d.order), ZSeries(d.order)};
    for (int r = 1; r <= d.order; ++r) h.hh2.at(r) = d.m[static_cast<size_t>(r)];
    ZSeries cyc = sym_log(hilbert_OA(d, det_bound));
    h.hh0 = cyc;
    h.hh0.at(0) = d.num_vertices;
    h.hh1 = cyc + h.hh2;
    return h;
}

// Builds the datum straight from a presentation: V from the generator
// degrees, L from exact per-(i, j, r) ranks of the relation span, m from
// the intersection with the commutator space.
inline VLDatum datum_from_presentation(const Presentation& pr, int order,
                                       long path_cap = kDefaultPathCap) {
    const Quiver& q = pr.quiver;
    VLDatum d = VLDatum::empty(q.num_vertices(), order);
    for (const Edge& e : q.edges())
        if (e.degree <= order) ++d.dimsV[static_cast<size_t>(e.tail)][static_cast<size_t>(e.head)]
                                        [static_cast<size_t>(e.degree)];
    // Relation ranks per (tail, head, weight).
    std::map<std::tuple<int, int, int>, RowReducer> red;
    std::map<int, PathSet> bases;
    for (const NCPoly& rel : pr.relations) {
        if (rel.weight > order) continue;
        auto [bit, fresh] = bases.try_emplace(rel.weight);
        if (fresh) bit->second = enumerate_paths(q, rel.weight, path_cap);
        SparseVec v;
        for (const auto& [coeff, seq] : rel.terms)
            v.emplace_back(bit->second.index_of(q.edge(seq.front()).tail, seq), coeff);
        if (red[{rel.tail, rel.head, rel.weight}].add(std::move(v)))
            ++d.dimsL[static_cast<size_t>(rel.tail)][static_cast<size_t>(rel.head)]
                     [static_cast<size_t>(rel.weight)];
    }
    ZSeries m = compute_L_circ(pr, order, path_cap);
    for (int r = 0; r <= order; ++r) {
        if (!m[r].fits_slong_p()) throw std::overflow_error("datum: m_r overflow");
        d.m[static_cast<size_t>(r)] = m[r].get_si();
    }
    return d;
}

// h(A1 * A2) = (h(A1)^{-1} + h(A2)^{-1} - 1)^{-1} for algebras over the
// same vertex ring.
inline ZMatSeries free_product_hilbert(const ZMatSeries& h1, const ZMatSeries& h2) {
    ZMatSeries one = ZMatSeries::identity(h1.dim(), h1.order());
    return (h1.inverse() + h2.inverse() - one).inverse();
}

// h(B circ D) = (1 - h(D) (h(V) - h(L)))^{-1} h(D), where B is presented
// by the datum (V, L) and D is an augmented algebra over the same ring.
inline ZMatSeries circ_product_hilbert(const ZMatSeries& hV, const ZMatSeries& hL,
                                       const ZMatSeries& hD) {
    ZMatSeries one = ZMatSeries::identity(hD.dim(), hD.order());
    return (one - hD * (hV - hL)).inverse() * hD;
}

// h(O(B circ D)) = h(O(D)) / ( lambda_Q * prod_{s>=1} det(1 - h(D; t^s)
// (h(V; t^s) - h(L; t^s))) ), with lambda_Q = prod_r (1 - t^r)^{mQ_r}
// supplied by the caller.
inline ZSeries circ_product_OA(const ZMatSeries& hV, const ZMatSeries& hL,
                               const ZMatSeries& hD, const ZSeries& hOD,
                               const std::vector<long>& mQ,
                               int det_bound = kDefaultDetBound) {
    const int n = hD.order();
    ZMatSeries p = ZMatSeries::identity(hD.dim(), n) - hD * (hV - hL);
    ZSeries det = p.det(det_bound);
    if (det[0] != 1)
        throw std::domain_error("circ_product_OA: det must have constant term 1");
    ZSeries prod = ZSeries::one(n);
    for (int s = 1; s <= n; ++s) prod *= det.substitute_power(s);
    ZSeries lam(n);
    for (size_t r = 1; r < mQ.size() && static_cast<int>(r) <= n; ++r)
        lam.at(static_cast<int>(r)) = -mQ[r];
    return hOD * sym_exp(lam).inverse() * prod.inverse();
}

} // namespace ncalg
