#pragma once

// Quiver data model: vertices, weighted edges, doubling, adjacency matrix
// of the double, Dynkin / extended-Dynkin shape recognition with the
// extending-vertex set, and the t-analogue of the Cartan matrix.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncalg/mat_series.hpp"
#include "ncalg/series.hpp"

namespace ncalg {

struct Edge {
    int tail = 0;
    int head = 0;
    int degree = 1;
    std::string name;
};

class Quiver {
public:
    int add_vertex(const std::string& label) {
        vertices_.push_back(label);
        return static_cast<int>(vertices_.size()) - 1;
    }
    int add_edge(int tail, int head, int degree = 1, std::string name = "") {
        check_vertex(tail);
        check_vertex(head);
        if (degree < 1) throw std::invalid_argument("quiver: edge degree must be >= 1");
        if (name.empty()) name = "e" + std::to_string(edges_.size());
        edges_.push_back(Edge{tail, head, degree, std::move(name)});
        return static_cast<int>(edges_.size()) - 1;
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int k) const { return edges_.at(static_cast<size_t>(k)); }

    int vertex_index(const std::string& label) const {
        for (int i = 0; i < num_vertices(); ++i)
            if (vertices_[i] == label) return i;
        throw std::invalid_argument("quiver: unknown vertex '" + label + "'");
    }
    int edge_index(const std::string& name) const {
        for (int i = 0; i < num_edges(); ++i)
            if (edges_[i].name == name) return i;
        throw std::invalid_argument("quiver: unknown edge '" + name + "'");
    }

    bool is_connected() const {
        if (num_vertices() == 0) return false;
        std::vector<bool> seen(vertices_.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Edge& e : edges_) {
                int u = -1;
                if (e.tail == v) u = e.head;
                else if (e.head == v) u = e.tail;
                if (u >= 0 && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    bool all_degrees_one() const {
        return std::all_of(edges_.begin(), edges_.end(),
                           [](const Edge& e) { return e.degree == 1; });
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= num_vertices())
            throw std::invalid_argument("quiver: edge endpoint out of range");
    }

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

// Doubling: each edge a gives a pair (a, a*) of opposite orientations,
// originals first, stars after, a* keeping the degree of a.
struct DoubledQuiver {
    Quiver base;
    Quiver full;  // 2|E| edges
};

inline DoubledQuiver double_quiver(const Quiver& q) {
    DoubledQuiver d;
    d.base = q;
    d.full = Quiver{};
    for (const std::string& v : q.vertices()) d.full.add_vertex(v);
    for (const Edge& e : q.edges()) d.full.add_edge(e.tail, e.head, e.degree, e.name);
    for (const Edge& e : q.edges()) d.full.add_edge(e.head, e.tail, e.degree, e.name + "*");
    return d;
}

using AdjacencyMatrix = std::vector<std::vector<long>>;

inline AdjacencyMatrix adjacency(const DoubledQuiver& d) {
    const int n = d.full.num_vertices();
    AdjacencyMatrix c(n, std::vector<long>(n, 0));
    for (const Edge& e : d.full.edges()) c[e.tail][e.head] += 1;
    return c;
}

// 1 - t*c + t^2 * 1
inline ZMatSeries cartan_matrix_series(const AdjacencyMatrix& c, int order) {
    const int n = static_cast<int>(c.size());
    ZMatSeries m = ZMatSeries::identity(n, order);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m(i, j) -= ZSeries::monomial(order, 1, Int(c[i][j]));
        m(i, i) += ZSeries::monomial(order, 2, Int(1));
    }
    return m;
}

enum class QuiverKind { Dynkin, ExtendedDynkin, Wild };

struct Classification {
    QuiverKind kind = QuiverKind::Wild;
    std::string type;               // e.g. "A3", "A~1", "E~8"
    std::vector<int> extending;     // extending vertices (ExtendedDynkin only)
};

namespace detail {

struct Arms {
    int center = -1;
    std::vector<std::vector<int>> arms;  // vertex lists walking away from center
};

// Decompose a tree with a unique branch vertex into its arms.
inline std::optional<Arms> tree_arms(const Quiver& q, const std::vector<int>& deg,
                                     const std::vector<std::vector<int>>& nbr) {
    Arms a;
    for (int v = 0; v < q.num_vertices(); ++v)
        if (deg[v] >= 3) {
            if (a.center >= 0) return std::nullopt;  // more than one branch vertex
            a.center = v;
        }
    if (a.center < 0) return std::nullopt;
    for (int start : nbr[a.center]) {
        std::vector<int> arm{start};
        int prev = a.center, cur = start;
        while (true) {
            const auto& ns = nbr[cur];
            if (ns.size() == 1) break;      // leaf
            if (ns.size() != 2) return std::nullopt;  // hits another branch vertex
            int nxt = (ns[0] == prev) ? ns[1] : ns[0];
            arm.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        a.arms.push_back(std::move(arm));
    }
    std::sort(a.arms.begin(), a.arms.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return a;
}

} // namespace detail

// Exact shape recognition against the ADE and affine ADE catalogs. For
// extended Dynkin shapes, `extending` lists every vertex that can serve as
// extending vertex (the automorphism orbit; equivalently the vertices of
// mark 1).
inline Classification classify(const Quiver& q) {
    if (!q.is_connected())
        throw std::invalid_argument("classify: quiver must be connected");
    if (!q.all_degrees_one())
        throw std::invalid_argument("classify: all edge degrees must be 1");

    const int n = q.num_vertices();
    Classification r;

    int loops = 0;
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (const Edge& e : q.edges()) {
        if (e.tail == e.head) ++loops;
        else {
            ++mult[e.tail][e.head];
            ++mult[e.head][e.tail];
        }
    }

    if (loops > 0) {
        if (n == 1 && q.num_edges() == 1) {
            r.kind = QuiverKind::ExtendedDynkin;
            r.type = "A~0";
            r.extending = {0};
        }
        return r;  // any other loop: wild
    }

    bool has_multi = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mult[i][j] > 1) has_multi = true;
    if (has_multi) {
        if (n == 2 && q.num_edges() == 2 && mult[0][1] == 2) {
            r.kind = QuiverKind::ExtendedDynkin;
            r.type = "A~1";
            r.extending = {0, 1};
        }
        return r;
    }

    // Simple connected graph from here on.
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mult[i][j]) {
                deg[i] += 1;
                nbr[i].push_back(j);
            }
    const int e_count = q.num_edges();
    const int max_deg = *std::max_element(deg.begin(), deg.end());

    if (max_deg <= 2) {
        if (e_count == n - 1) {  // path
            r.kind = QuiverKind::Dynkin;
            r.type = "A" + std::to_string(n);
            return r;
        }
        if (e_count == n) {  // cycle: affine A_{n-1}
            r.kind = QuiverKind::ExtendedDynkin;
            r.type = "A~" + std::to_string(n - 1);
            r.extending.resize(n);
            for (int i = 0; i < n; ++i) r.extending[i] = i;
            return r;
        }
        return r;
    }
    if (e_count != n - 1) return r;  // branch vertex + cycle: wild

    if (max_deg >= 4) {
        // Star with four leaves is affine D_4.
        if (max_deg == 4 && n == 5) {
            int center = int(std::find(deg.begin(), deg.end(), 4) - deg.begin());
            r.kind = QuiverKind::ExtendedDynkin;
            r.type = "D~4";
            for (int v = 0; v < n; ++v)
                if (v != center) r.extending.push_back(v);
        }
        return r;
    }

    int branch_count = int(std::count(deg.begin(), deg.end(), 3));
    if (branch_count == 2) {
        // Affine D_n (n >= 5): two branch vertices, each carrying exactly
        // two pendant leaves, joined by a path.
        std::vector<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 3) {
                int pendant = 0;
                for (int u : nbr[v])
                    if (deg[u] == 1) {
                        ++pendant;
                        leaves.push_back(u);
                    }
                if (pendant != 2) return r;
            }
        r.kind = QuiverKind::ExtendedDynkin;
        r.type = "D~" + std::to_string(n - 1);
        std::sort(leaves.begin(), leaves.end());
        r.extending = leaves;
        return r;
    }
    if (branch_count != 1) return r;

    auto arms = detail::tree_arms(q, deg, nbr);
    if (!arms) return r;
    std::vector<size_t> len;
    for (const auto& a : arms->arms) len.push_back(a.size());
    auto ends_of = [&](std::initializer_list<int> which) {
        std::vector<int> v;
        for (int k : which) v.push_back(arms->arms[static_cast<size_t>(k)].back());
        std::sort(v.begin(), v.end());
        return v;
    };

    if (len.size() == 3) {
        if (len[0] == 1 && len[1] == 1) {
            r.kind = QuiverKind::Dynkin;
            r.type = "D" + std::to_string(n);
        } else if (len[0] == 1 && len[1] == 2 && len[2] == 2) {
            r.kind = QuiverKind::Dynkin;
            r.type = "E6";
        } else if (len[0] == 1 && len[1] == 2 && len[2] == 3) {
            r.kind = QuiverKind::Dynkin;
            r.type = "E7";
        } else if (len[0] == 1 && len[1] == 2 && len[2] == 4) {
            r.kind = QuiverKind::Dynkin;
            r.type = "E8";
        } else if (len[0] == 2 && len[1] == 2 && len[2] == 2) {
            r.kind = QuiverKind::ExtendedDynkin;
            r.type = "E~6";
            r.extending = ends_of({0, 1, 2});
        } else if (len[0] == 1 && len[1] == 3 && len[2] == 3) {
            r.kind = QuiverKind::ExtendedDynkin;
            r.type = "E~7";
            r.extending = ends_of({1, 2});
        } else if (len[0] == 1 && len[1] == 2 && len[2] == 5) {
            r.kind = QuiverKind::ExtendedDynkin;
            r.type = "E~8";
            r.extending = ends_of({2});
        }
    }
    return r;
}

// ---- Shape builders (used by the verification catalogs) ----

inline Quiver cycle_quiver(int vertices) {
    Quiver q;
    for (int i = 0; i < vertices; ++i) q.add_vertex(std::to_string(i));
    if (vertices == 1) q.add_edge(0, 0);
    else
        for (int i = 0; i < vertices; ++i) q.add_edge(i, (i + 1) % vertices);
    return q;
}

inline Quiver path_quiver(int vertices) {
    Quiver q;
    for (int i = 0; i < vertices; ++i) q.add_vertex(std::to_string(i));
    for (int i = 0; i + 1 < vertices; ++i) q.add_edge(i, i + 1);
    return q;
}

// n loops at a single vertex.
inline Quiver loop_quiver(int loops) {
    Quiver q;
    q.add_vertex("0");
    for (int i = 0; i < loops; ++i) q.add_edge(0, 0);
    return q;
}

// Affine A~n for n >= 1: cycle with n+1 vertices (A~1 = double edge).
inline Quiver affine_a(int n) {
    if (n < 1) throw std::invalid_argument("affine_a: n >= 1 required");
    if (n == 1) {
        Quiver q;
        q.add_vertex("0");
        q.add_vertex("1");
        q.add_edge(0, 1);
        q.add_edge(0, 1);
        return q;
    }
    return cycle_quiver(n + 1);
}

// Affine D~n for n >= 4 (n+1 vertices).
inline Quiver affine_d(int n) {
    if (n < 4) throw std::invalid_argument("affine_d: n >= 4 required");
    Quiver q;
    for (int i = 0; i <= n; ++i) q.add_vertex(std::to_string(i));
    // Spine 2,3,...,n-2 with leaf pairs {0,1} and {n-1,n}.
    q.add_edge(0, 2);
    q.add_edge(1, 2);
    for (int i = 2; i + 1 <= n - 2; ++i) q.add_edge(i, i + 1);
    q.add_edge(n - 2, n - 1);
    q.add_edge(n - 2, n);
    return q;
}

// Affine E~n for n in {6,7,8}.
inline Quiver affine_e(int n) {
    std::vector<int> arm_lengths;
    if (n == 6) arm_lengths = {2, 2, 2};
    else if (n == 7) arm_lengths = {1, 3, 3};
    else if (n == 8) arm_lengths = {1, 2, 5};
    else throw std::invalid_argument("affine_e: n must be 6, 7 or 8");
    Quiver q;
    int center = q.add_vertex("c");
    for (size_t a = 0; a < arm_lengths.size(); ++a) {
        int prev = center;
        for (int k = 0; k < arm_lengths[a]; ++k) {
            int v = q.add_vertex(std::to_string(a) + "." + std::to_string(k));
            q.add_edge(prev, v);
            prev = v;
        }
    }
    return q;
}

} // namespace ncalg
