#ifndef TORICSING_DYNKIN_HPP
#define TORICSING_DYNKIN_HPP

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toricsing/ints.hpp"
#include "toricsing/linalg.hpp"

namespace toricsing {

enum class AdeKind { A, D, E };

inline std::string ade_name(AdeKind k, int n) {
    switch (k) {
        case AdeKind::A: return "A" + std::to_string(n);
        case AdeKind::D: return "D" + std::to_string(n);
        case AdeKind::E: return "E" + std::to_string(n);
    }
    return "?";
}

inline AdeKind ade_kind_from(const std::string& s) {
    if (s == "A" || s == "a") return AdeKind::A;
    if (s == "D" || s == "d") return AdeKind::D;
    if (s == "E" || s == "e") return AdeKind::E;
    throw std::invalid_argument("unknown Dynkin kind: " + s);
}

// Vertex numbering, fixed across the whole library:
//   A_n: the path 1 - 2 - ... - n.
//   D_n: fork tips 1 and n both attached to vertex 2; path 2 - 3 - ... - (n-1).
//   E_n: path 1 - 2 - ... - (n-1); branch vertex n attached to vertex 3.
struct AdeGraph {
    AdeKind kind;
    int n;
    std::vector<std::pair<int, int>> edges;  // 0-based
};

inline AdeGraph ade_graph(AdeKind kind, int n) {
    AdeGraph g{kind, n, {}};
    switch (kind) {
        case AdeKind::A:
            if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
            for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
            break;
        case AdeKind::D:
            if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
            g.edges.emplace_back(0, 1);
            g.edges.emplace_back(n - 1, 1);
            for (int i = 1; i + 1 < n - 1; ++i) g.edges.emplace_back(i, i + 1);
            break;
        case AdeKind::E:
            if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6, 7, 8}");
            for (int i = 0; i + 1 < n - 1; ++i) g.edges.emplace_back(i, i + 1);
            g.edges.emplace_back(2, n - 1);
            break;
    }
    return g;
}

// Intersection matrix of the exceptional curves: -2 on the diagonal (every
// curve is a smooth rational -2 curve here), 1 where two curves meet.
inline IntMat incidence_matrix(const AdeGraph& g) {
    IntMat m(g.n, std::vector<Int>(g.n, 0));
    for (int i = 0; i < g.n; ++i) m[i][i] = -2;
    for (auto [a, b] : g.edges) {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    return m;
}

// A point set in N^ambient; column j is the exponent vector of the j-th
// semigroup generator, i.e. the A-matrix columns of the toric ideal.
struct Configuration {
    std::string name;
    int ambient = 0;
    std::vector<std::vector<int64_t>> points;
    std::vector<std::string> vars;

    int size() const { return static_cast<int>(points.size()); }
};

namespace detail {

inline std::vector<int64_t> unit_point(int n, std::initializer_list<std::pair<int, int>> terms) {
    std::vector<int64_t> v(n, 0);
    for (auto [vertex, c] : terms) v[vertex - 1] += c;  // 1-based vertex labels
    return v;
}

// Degree-descending, then lexicographically descending. Total on distinct
// points, so the resulting order is reproducible.
inline void canonical_sort(std::vector<std::vector<int64_t>>& pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        int64_t da = 0, db = 0;
        for (auto x : a) da += x;
        for (auto x : b) db += x;
        if (da != db) return da > db;
        return a > b;
    });
}

} // namespace detail

// Minimal nonzero elements of S = N^n intersected with the image lattice
// (-M) Z^n, where M is the intersection matrix. Membership of d is tested as
// adj(-M) d == 0 mod det(-M). Every minimal element has total degree at most
// det(-M): with more unit-vector summands than the group order two partial
// sums collide mod the lattice, splitting off a smaller member. The sweep
// still runs to twice the bound and insists nothing new shows up.
inline std::vector<std::vector<int64_t>> lipman_points(const AdeGraph& g) {
    const int n = g.n;
    IntMat c = incidence_matrix(g);
    for (auto& row : c)
        for (auto& x : row) x = -x;
    if (!is_negative_definite(incidence_matrix(g)))
        throw std::logic_error("intersection matrix must be negative definite");
    Int det_big = determinant(c);
    IntMat adj_big = adjugate(c);
    const int64_t det = to_int64_checked(det_big);
    std::vector<std::vector<int64_t>> adj(n, std::vector<int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = to_int64_checked(adj_big[i][j]);

    auto member = [&](const std::vector<int64_t>& d) {
        for (int i = 0; i < n; ++i) {
            int64_t s = 0;
            for (int j = 0; j < n; ++j) s += adj[i][j] * d[j];
            if (s % det != 0) return false;
        }
        return true;
    };

    std::vector<std::vector<int64_t>> minimal;
    auto dominated = [&](const std::vector<int64_t>& d) {
        for (const auto& m : minimal) {
            bool le = true;
            for (int i = 0; i < n && le; ++i) le = m[i] <= d[i];
            if (le) return true;
        }
        return false;
    };

    std::vector<int64_t> cur(n, 0);
    std::function<void(int, int64_t, int64_t)> walk = [&](int pos, int64_t left, int64_t deg) {
        if (pos == n - 1) {
            cur[pos] = left;
            if (member(cur) && !dominated(cur)) {
                if (deg > det)
                    throw std::logic_error("semigroup generator past its degree bound");
                minimal.push_back(cur);
            }
            return;
        }
        for (int64_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            walk(pos + 1, left - v, deg);
        }
    };
    for (int64_t deg = 1; deg <= 2 * det; ++deg) walk(0, deg, deg);

    detail::canonical_sort(minimal);
    return minimal;
}

inline Configuration lipman_configuration(AdeKind kind, int n) {
    Configuration c;
    c.name = ade_name(kind, n);
    c.ambient = n;
    c.points = lipman_points(ade_graph(kind, n));
    for (int j = 1; j <= c.size(); ++j) c.vars.push_back("x" + std::to_string(j));
    return c;
}

// Closed-form generator lists, in the fixed table layout the verification
// tables are written against. Index helpers live next to each builder so the
// tables can address points symbolically.

// D_{2m}: J = {3, 5, ..., n-1}, J^c = {2, 4, ..., n-2}. One point per vertex
// (2e_i for i in J and for 1, n; e_i for i in J^c), then e_k + e_l for pairs
// in J, then e_i + e_1 + e_n for i in J.
struct DEvenLayout {
    int n = 0, m = 0;
    std::vector<int> J, Jc;  // 1-based vertex labels

    explicit DEvenLayout(int n_) : n(n_), m(n_ / 2) {
        if (n < 4 || n % 2 != 0) throw std::invalid_argument("D even layout needs even n >= 4");
        for (int i = 3; i < n; i += 2) J.push_back(i);
        for (int i = 2; i < n - 1; i += 2) Jc.push_back(i);
    }

    int jpos(int i) const {
        auto it = std::find(J.begin(), J.end(), i);
        if (it == J.end()) throw std::invalid_argument("vertex not in J");
        return static_cast<int>(it - J.begin());
    }
    int size() const { return n + m * (m - 1) / 2; }  // n + C(m-1,2) + (m-1)
    int idx_vertex(int i) const { return i - 1; }
    int idx_pair(int k, int l) const {
        int a = jpos(k), b = jpos(l);
        if (a > b) std::swap(a, b);
        if (a == b) throw std::invalid_argument("pair needs distinct vertices");
        int t = static_cast<int>(J.size());
        return n + a * t - a * (a + 1) / 2 + (b - a - 1);
    }
    int idx_y(int i) const {
        int t = static_cast<int>(J.size());
        return n + t * (t - 1) / 2 + jpos(i);
    }
};

inline Configuration d_even_configuration(int n) {
    DEvenLayout lay(n);
    Configuration c;
    c.name = ade_name(AdeKind::D, n);
    c.ambient = n;
    auto add = [&](std::vector<int64_t> p, std::string v) {
        c.points.push_back(std::move(p));
        c.vars.push_back(std::move(v));
    };
    for (int i = 1; i <= n; ++i) {
        bool twice = i == 1 || i == n || std::count(lay.J.begin(), lay.J.end(), i);
        add(detail::unit_point(n, {{i, twice ? 2 : 1}}), "x" + std::to_string(i));
    }
    for (size_t a = 0; a < lay.J.size(); ++a)
        for (size_t b = a + 1; b < lay.J.size(); ++b)
            add(detail::unit_point(n, {{lay.J[a], 1}, {lay.J[b], 1}}),
                "x" + std::to_string(lay.J[a]) + "_" + std::to_string(lay.J[b]));
    for (int i : lay.J)
        add(detail::unit_point(n, {{i, 1}, {1, 1}, {n, 1}}), "y" + std::to_string(i));
    if (c.size() != lay.size()) throw std::logic_error("D even layout size mismatch");
    return c;
}

// D_{2m+1}: J = {2, 4, ..., n-1}, J^c = {3, 5, ..., n-2}. Vertex points
// (4e_1, 4e_n at the fork tips), pairs over J, the tip pair e_1 + e_n, then
// e_i + 2e_1 and e_i + 2e_n for i in J. The two y families e_i + 3e_1 + e_n
// and e_i + e_1 + 3e_n are semigroup members but not minimal generators;
// include_redundant controls whether they are part of the configuration.
struct DOddLayout {
    int n = 0, m = 0;
    bool redundant = true;
    std::vector<int> J, Jc;

    DOddLayout(int n_, bool redundant_) : n(n_), m((n_ - 1) / 2), redundant(redundant_) {
        if (n < 5 || n % 2 == 0) throw std::invalid_argument("D odd layout needs odd n >= 5");
        for (int i = 2; i < n; i += 2) J.push_back(i);
        for (int i = 3; i < n - 1; i += 2) Jc.push_back(i);
    }

    int jpos(int i) const {
        auto it = std::find(J.begin(), J.end(), i);
        if (it == J.end()) throw std::invalid_argument("vertex not in J");
        return static_cast<int>(it - J.begin());
    }
    int size() const { return n + m * (m - 1) / 2 + 1 + 2 * m + (redundant ? 2 * m : 0); }
    int idx_vertex(int i) const { return i - 1; }
    int idx_pair(int k, int l) const {
        int a = jpos(k), b = jpos(l);
        if (a > b) std::swap(a, b);
        if (a == b) throw std::invalid_argument("pair needs distinct vertices");
        return n + a * m - a * (a + 1) / 2 + (b - a - 1);
    }
    int idx_t() const { return n + m * (m - 1) / 2; }
    int idx_z(int i) const { return idx_t() + 1 + jpos(i); }          // e_i + 2 e_1
    int idx_w(int i) const { return idx_t() + 1 + m + jpos(i); }      // e_i + 2 e_n
    int idx_y1(int i) const {
        if (!redundant) throw std::invalid_argument("minimal layout has no y points");
        return idx_t() + 1 + 2 * m + jpos(i);
    }
    int idx_yn(int i) const {
        if (!redundant) throw std::invalid_argument("minimal layout has no y points");
        return idx_t() + 1 + 3 * m + jpos(i);
    }
};

inline Configuration d_odd_configuration(int n, bool include_redundant = true) {
    DOddLayout lay(n, include_redundant);
    Configuration c;
    c.name = ade_name(AdeKind::D, n);
    c.ambient = n;
    auto add = [&](std::vector<int64_t> p, std::string v) {
        c.points.push_back(std::move(p));
        c.vars.push_back(std::move(v));
    };
    for (int i = 1; i <= n; ++i) {
        int coef = (i == 1 || i == n) ? 4 : (std::count(lay.J.begin(), lay.J.end(), i) ? 2 : 1);
        add(detail::unit_point(n, {{i, coef}}), "x" + std::to_string(i));
    }
    for (size_t a = 0; a < lay.J.size(); ++a)
        for (size_t b = a + 1; b < lay.J.size(); ++b)
            add(detail::unit_point(n, {{lay.J[a], 1}, {lay.J[b], 1}}),
                "x" + std::to_string(lay.J[a]) + "_" + std::to_string(lay.J[b]));
    add(detail::unit_point(n, {{1, 1}, {n, 1}}), "x1_" + std::to_string(n));
    for (int i : lay.J)
        add(detail::unit_point(n, {{i, 1}, {1, 2}}), "x" + std::to_string(i) + "_1");
    for (int i : lay.J)
        add(detail::unit_point(n, {{i, 1}, {n, 2}}),
            "x" + std::to_string(i) + "_" + std::to_string(n));
    if (include_redundant) {
        for (int i : lay.J)
            add(detail::unit_point(n, {{i, 1}, {1, 3}, {n, 1}}), "y" + std::to_string(i) + "_1");
        for (int i : lay.J)
            add(detail::unit_point(n, {{i, 1}, {1, 1}, {n, 3}}),
                "y" + std::to_string(i) + "_" + std::to_string(n));
    }
    if (c.size() != lay.size()) throw std::logic_error("D odd layout size mismatch");
    return c;
}

inline Configuration e_configuration(int n) {
    Configuration c;
    c.name = ade_name(AdeKind::E, n);
    c.ambient = n;
    auto P = [&](std::initializer_list<std::pair<int, int>> terms) {
        c.points.push_back(detail::unit_point(n, terms));
    };
    if (n == 6) {
        P({{1, 3}}); P({{2, 3}}); P({{3, 1}}); P({{4, 3}}); P({{5, 3}}); P({{6, 1}});
        P({{1, 1}, {2, 1}}); P({{1, 1}, {5, 1}}); P({{2, 1}, {4, 1}}); P({{4, 1}, {5, 1}});
        P({{2, 2}, {5, 1}}); P({{2, 1}, {5, 2}}); P({{1, 2}, {4, 1}}); P({{1, 1}, {4, 2}});
    } else if (n == 7) {
        P({{1, 1}}); P({{2, 1}}); P({{3, 1}}); P({{4, 2}}); P({{5, 1}});
        P({{6, 2}}); P({{7, 2}}); P({{4, 1}, {6, 1}}); P({{4, 1}, {7, 1}}); P({{6, 1}, {7, 1}});
    } else if (n == 8) {
        for (int i = 1; i <= 8; ++i) P({{i, 1}});
    } else {
        throw std::invalid_argument("E_n needs n in {6, 7, 8}");
    }
    for (int j = 1; j <= c.size(); ++j) c.vars.push_back("x" + std::to_string(j));
    return c;
}

// The generator list in table layout. For D odd this includes the two
// non-minimal y families; pass include_redundant = false for the minimal set.
inline Configuration closed_form_configuration(AdeKind kind, int n, bool include_redundant = true) {
    switch (kind) {
        case AdeKind::A: return lipman_configuration(kind, n);
        case AdeKind::D:
            return (n % 2 == 0) ? d_even_configuration(n)
                                : d_odd_configuration(n, include_redundant);
        case AdeKind::E: return e_configuration(n);
    }
    throw std::invalid_argument("unknown kind");
}

inline bool same_point_set(std::vector<std::vector<int64_t>> a, std::vector<std::vector<int64_t>> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace toricsing

#endif
