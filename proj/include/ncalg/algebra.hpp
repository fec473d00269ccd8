#pragma once

// Brute-force oracle for quotients of weighted path algebras: exact graded
// dimensions of A = F/(relations), of the cyclic quotient A/[A,A], and of
// L-circ = span(relations) cap [F,F], all by exact rational rank per weight.
// No floating point anywhere in this module.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/mat_series.hpp"
#include "ncalg/quiver.hpp"
#include "ncalg/series.hpp"

namespace ncalg {

inline constexpr long kDefaultPathCap = 1'000'000;

struct Path {
    int start = 0;              // tail vertex (meaningful for the trivial path)
    int end = 0;                // head vertex
    int weight = 0;             // sum of edge degrees
    std::vector<int> edges;     // edge indices, composable left to right
};

// Homogeneous noncommutative polynomial: all terms share tail, head, weight.
struct NCPoly {
    int tail = 0;
    int head = 0;
    int weight = 0;
    std::vector<std::pair<Rat, std::vector<int>>> terms;  // (coeff, edge sequence)
};

struct Presentation {
    Quiver quiver;               // generators = edges with their degrees
    std::vector<NCPoly> relations;
};

// Builds a homogeneous relation from (coeff, edge name sequence) terms,
// validating composability and homogeneity.
inline NCPoly make_relation(const Quiver& q,
                            const std::vector<std::pair<Rat, std::vector<std::string>>>& terms) {
    if (terms.empty()) throw std::invalid_argument("relation: no terms");
    NCPoly p;
    bool first = true;
    for (const auto& [coeff, names] : terms) {
        if (names.empty()) throw std::invalid_argument("relation: empty path term");
        std::vector<int> ids;
        int tail = -1, head = -1, w = 0;
        for (const std::string& nm : names) {
            int k = q.edge_index(nm);
            const Edge& e = q.edge(k);
            if (head >= 0 && e.tail != head)
                throw std::invalid_argument("relation: path does not compose at '" + nm + "'");
            if (tail < 0) tail = e.tail;
            head = e.head;
            w += e.degree;
            ids.push_back(k);
        }
        if (first) {
            p.tail = tail;
            p.head = head;
            p.weight = w;
            first = false;
        } else if (tail != p.tail || head != p.head || w != p.weight) {
            throw std::invalid_argument("relation: terms are not homogeneous in (tail, head, weight)");
        }
        p.terms.emplace_back(coeff, std::move(ids));
    }
    if (p.weight < 1) throw std::invalid_argument("relation: weight must be >= 1");
    return p;
}

// ---- Path enumeration ----

class PathSet {
public:
    const std::vector<Path>& paths() const { return paths_; }
    int size() const { return static_cast<int>(paths_.size()); }

    int index_of(int start, const std::vector<int>& edges) const {
        auto it = index_.find({start, edges});
        if (it == index_.end()) throw std::logic_error("path set: path not found");
        return it->second;
    }

    void insert(Path p) {
        index_[{p.start, p.edges}] = static_cast<int>(paths_.size());
        paths_.push_back(std::move(p));
    }

private:
    std::vector<Path> paths_;
    std::map<std::pair<int, std::vector<int>>, int> index_;
};

// All paths of weight exactly r, deterministic order (by start vertex, then
// lexicographic by edge index). Trivial paths are the weight-0 paths.
inline PathSet enumerate_paths(const Quiver& q, int r, long path_cap = kDefaultPathCap) {
    if (r < 0) throw std::invalid_argument("enumerate_paths: weight must be >= 0");
    PathSet out;
    long count = 0;
    Path cur;
    auto bump = [&]() {
        if (++count > path_cap)
            throw std::runtime_error(
                "enumerate_paths: path cap " + std::to_string(path_cap) +
                " exceeded at weight " + std::to_string(r) + " (raise --path-cap)");
    };
    std::function<void(int, int)> dfs = [&](int at, int remaining) {
        if (remaining == 0) {
            bump();
            cur.end = at;
            cur.weight = r;
            out.insert(cur);
            return;
        }
        for (int k = 0; k < q.num_edges(); ++k) {
            const Edge& e = q.edge(k);
            if (e.tail != at || e.degree > remaining) continue;
            cur.edges.push_back(k);
            dfs(e.head, remaining - e.degree);
            cur.edges.pop_back();
        }
    };
    for (int v = 0; v < q.num_vertices(); ++v) {
        cur.start = v;
        cur.edges.clear();
        dfs(v, r);
    }
    return out;
}

// ---- Exact sparse rank ----

using SparseVec = std::vector<std::pair<int, Rat>>;  // sorted by index, nonzero coeffs

namespace detail {

inline void normalize_sparse(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i) out.back().second += c;
        else out.emplace_back(i, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second == 0; }),
              out.end());
    v = std::move(out);
}

// v += c * w (both sorted).
inline SparseVec sparse_axpy(const SparseVec& v, const Rat& c, const SparseVec& w) {
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first))
            out.push_back(v[i++]);
        else if (i == v.size() || w[j].first < v[i].first)
            out.emplace_back(w[j].first, c * w[j].second), ++j;
        else {
            Rat s = v[i].second + c * w[j].second;
            if (s != 0) out.emplace_back(v[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return out;
}

} // namespace detail

// Incremental exact row reduction; rank() is the number of pivots.
class RowReducer {
public:
    bool add(SparseVec v) {
        detail::normalize_sparse(v);
        while (!v.empty()) {
            const int lead = v.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                const Rat inv = Rat(1) / v.front().second;
                for (auto& [i, c] : v) c *= inv;
                pivots_.emplace(lead, std::move(v));
                return true;
            }
            v = detail::sparse_axpy(v, -v.front().second, it->second);
        }
        return false;
    }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, SparseVec> pivots_;
};

// ---- Weight-graded machinery ----

namespace detail {

// p . rel . q as a sparse vector in the weight-(|p|+|rel|+|q|) path basis.
inline SparseVec sandwich(const PathSet& basis, const Path& p, const NCPoly& rel,
                          const Path& q) {
    SparseVec v;
    for (const auto& [coeff, mid] : rel.terms) {
        std::vector<int> seq;
        seq.reserve(p.edges.size() + mid.size() + q.edges.size());
        seq.insert(seq.end(), p.edges.begin(), p.edges.end());
        seq.insert(seq.end(), mid.begin(), mid.end());
        seq.insert(seq.end(), q.edges.begin(), q.edges.end());
        v.emplace_back(basis.index_of(p.start, seq), coeff);
    }
    return v;
}

// Visits every ideal spanning vector p.rel.q of weight r.
template <class Fn>
void for_each_ideal_vector(const Presentation& pr, int r,
                           const std::vector<PathSet>& paths_by_weight, Fn&& fn) {
    const PathSet& basis = paths_by_weight[static_cast<size_t>(r)];
    for (const NCPoly& rel : pr.relations) {
        if (rel.weight > r) continue;
        for (int r1 = 0; r1 + rel.weight <= r; ++r1) {
            const int r2 = r - rel.weight - r1;
            for (const Path& p : paths_by_weight[static_cast<size_t>(r1)].paths()) {
                if (p.end != rel.tail) continue;
                for (const Path& q : paths_by_weight[static_cast<size_t>(r2)].paths()) {
                    if (q.start != rel.head) continue;
                    fn(p, rel, q, sandwich(basis, p, rel, q));
                }
            }
        }
    }
}

} // namespace detail

// Cyclic-class (necklace) structure of a weight-r path basis: every
// non-closed path maps to zero in F/[F,F]; closed paths map to their
// rotation class.
struct CyclicClasses {
    std::vector<int> class_of;  // path id -> class id, or -1 for non-closed
    int num_classes = 0;
};

inline CyclicClasses cyclic_classes(const Quiver& q, const PathSet& basis) {
    CyclicClasses cc;
    cc.class_of.assign(static_cast<size_t>(basis.size()), -1);
    std::map<std::pair<int, std::vector<int>>, int> canon_to_class;
    for (int id = 0; id < basis.size(); ++id) {
        const Path& p = basis.paths()[static_cast<size_t>(id)];
        if (p.start != p.end) continue;
        // Lexicographically minimal rotation of the edge sequence.
        std::vector<int> best = p.edges;
        const size_t n = p.edges.size();
        for (size_t k = 1; k < n; ++k) {
            std::vector<int> rot(p.edges.begin() + static_cast<long>(k), p.edges.end());
            rot.insert(rot.end(), p.edges.begin(), p.edges.begin() + static_cast<long>(k));
            if (rot < best) best = std::move(rot);
        }
        int start = n ? q.edge(best.front()).tail : p.start;
        auto key = std::make_pair(start, std::move(best));
        auto [it, fresh] = canon_to_class.emplace(std::move(key), cc.num_classes);
        if (fresh) ++cc.num_classes;
        cc.class_of[static_cast<size_t>(id)] = it->second;
    }
    return cc;
}

struct GradedDims {
    ZMatSeries per_entry;  // dims[i][j][r]
    ZSeries total;
    GradedDims(int dim, int order) : per_entry(dim, order), total(order) {}
};

// Exact dim A[r] for r <= N, A = path algebra / (relations), per (i,j)
// entry and in total. dim A[r] = dim F[r] - rank(ideal[r]); the rank splits
// into (tail, head) blocks because the spanning vectors are homogeneous.
inline GradedDims brute_algebra_dims(const Presentation& pr, int order,
                                     long path_cap = kDefaultPathCap) {
    const int nv = pr.quiver.num_vertices();
    GradedDims out(nv, order);
    std::vector<PathSet> paths;
    for (int r = 0; r <= order; ++r)
        paths.push_back(enumerate_paths(pr.quiver, r, path_cap));

    for (int r = 0; r <= order; ++r) {
        std::vector<RowReducer> red(static_cast<size_t>(nv) * nv);
        detail::for_each_ideal_vector(
            pr, r, paths, [&](const Path& p, const NCPoly&, const Path& q, SparseVec v) {
                red[static_cast<size_t>(p.start) * nv + q.end].add(std::move(v));
            });
        std::vector<std::vector<long>> count(nv, std::vector<long>(nv, 0));
        for (const Path& p : paths[static_cast<size_t>(r)].paths()) ++count[p.start][p.end];
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) {
                long d = count[i][j] - red[static_cast<size_t>(i) * nv + j].rank();
                out.per_entry(i, j).at(r) = d;
                out.total.at(r) += d;
            }
    }
    return out;
}

struct CommutatorSubspace {
    std::vector<SparseVec> spanning;  // non-closed paths and rotation differences
    int rank = 0;
    long quotient_dim = 0;            // = number of cyclic classes of closed paths
};

// The weight-r commutator subspace [F,F][r], spanned by all non-closed
// paths and by w - rot(w) over closed paths w and rotation cuts.
inline CommutatorSubspace commutator_subspace(const Quiver& q, int r,
                                              long path_cap = kDefaultPathCap) {
    if (r < 1) throw std::invalid_argument("commutator_subspace: weight must be >= 1");
    PathSet basis = enumerate_paths(q, r, path_cap);
    CommutatorSubspace out;
    RowReducer red;
    for (int id = 0; id < basis.size(); ++id) {
        const Path& p = basis.paths()[static_cast<size_t>(id)];
        if (p.start != p.end) {
            SparseVec v{{id, Rat(1)}};
            if (red.add(v)) out.spanning.push_back(std::move(v));
            continue;
        }
        for (size_t k = 1; k < p.edges.size(); ++k) {
            std::vector<int> rot(p.edges.begin() + static_cast<long>(k), p.edges.end());
            rot.insert(rot.end(), p.edges.begin(), p.edges.begin() + static_cast<long>(k));
            int rid = basis.index_of(q.edge(rot.front()).tail, rot);
            if (rid == id) continue;
            SparseVec v{{id, Rat(1)}, {rid, Rat(-1)}};
            detail::normalize_sparse(v);
            if (red.add(v)) out.spanning.push_back(std::move(v));
        }
    }
    out.rank = red.rank();
    out.quotient_dim = basis.size() - out.rank;
    return out;
}

// m_r = dim( span(relations)[r] cap [F,F][r] ), computed as
// rank(relations) - rank(relations projected to F/[F,F]). The relation span
// is reduced to an independent set first (the linear shadow of minimality).
inline ZSeries compute_L_circ(const Presentation& pr, int order,
                              long path_cap = kDefaultPathCap) {
    ZSeries m(order);
    for (int r = 1; r <= order; ++r) {
        bool any = false;
        for (const NCPoly& rel : pr.relations) any = any || rel.weight == r;
        if (!any) continue;
        PathSet basis = enumerate_paths(pr.quiver, r, path_cap);
        CyclicClasses cc = cyclic_classes(pr.quiver, basis);
        RowReducer full, projected;
        for (const NCPoly& rel : pr.relations) {
            if (rel.weight != r) continue;
            SparseVec v, pv;
            for (const auto& [coeff, seq] : rel.terms) {
                int id = basis.index_of(pr.quiver.edge(seq.front()).tail, seq);
                v.emplace_back(id, coeff);
                if (cc.class_of[static_cast<size_t>(id)] >= 0)
                    pv.emplace_back(cc.class_of[static_cast<size_t>(id)], coeff);
            }
            if (full.add(std::move(v))) projected.add(std::move(pv));
        }
        m.at(r) = full.rank() - projected.rank();
    }
    return m;
}

// Exact dim (A/[A,A])[r] for 1 <= r <= N (coefficient 0 is left at zero:
// the positive part feeds sym_exp directly). Computed in the necklace
// quotient F/[F,F]: dimension = #classes - rank(projected ideal).
inline ZSeries brute_cyclic_dims(const Presentation& pr, int order,
                                 long path_cap = kDefaultPathCap) {
    ZSeries out(order);
    std::vector<PathSet> paths;
    for (int r = 0; r <= order; ++r)
        paths.push_back(enumerate_paths(pr.quiver, r, path_cap));
    for (int r = 1; r <= order; ++r) {
        const PathSet& basis = paths[static_cast<size_t>(r)];
        CyclicClasses cc = cyclic_classes(pr.quiver, basis);
        RowReducer red;
        detail::for_each_ideal_vector(
            pr, r, paths, [&](const Path&, const NCPoly&, const Path&, SparseVec v) {
                SparseVec pv;
                for (auto& [id, c] : v)
                    if (cc.class_of[static_cast<size_t>(id)] >= 0)
                        pv.emplace_back(cc.class_of[static_cast<size_t>(id)], c);
                red.add(std::move(pv));
            });
        out.at(r) = cc.num_classes - red.rank();
    }
    return out;
}

// h(Ker d) of the Anick complex: hA * (hA * (1 - hV + hL) - 1). Identically
// zero iff the Hilbert series matches the complete-intersection prediction
// up to the truncation order.
inline ZMatSeries anick_defect(const ZMatSeries& hA, const ZMatSeries& hV,
                               const ZMatSeries& hL) {
    ZMatSeries cartan = ZMatSeries::identity(hA.dim(), hA.order()) - hV + hL;
    return hA * (hA * cartan - ZMatSeries::identity(hA.dim(), hA.order()));
}

} // namespace ncalg
