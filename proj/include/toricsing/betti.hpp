#ifndef TORICSING_BETTI_HPP
#define TORICSING_BETTI_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "toricsing/dynkin.hpp"
#include "toricsing/groebner.hpp"
#include "toricsing/ints.hpp"
#include "toricsing/linalg.hpp"
#include "toricsing/toric.hpp"

namespace toricsing {

// All monomials of A-degree exactly b.
inline std::vector<Monomial> fiber(const Configuration& c, const std::vector<int64_t>& b,
                                   const Limits& lim = {}) {
    const int nv = c.size();
    StepCounter sc{lim.fiber_cap};
    std::vector<Monomial> out;
    std::vector<int32_t> cur(nv, 0);
    std::vector<int64_t> rem = b;
    std::function<void(int)> walk = [&](int pos) {
        sc.charge("fiber enumeration");
        if (pos == nv) {
            if (std::all_of(rem.begin(), rem.end(), [](int64_t x) { return x == 0; }))
                out.emplace_back(cur);
            return;
        }
        int64_t cap = -1;
        for (int i = 0; i < c.ambient; ++i) {
            if (c.points[pos][i] == 0) continue;
            int64_t q = rem[i] / c.points[pos][i];
            cap = (cap < 0) ? q : std::min(cap, q);
        }
        for (int64_t v = 0; v <= cap; ++v) {
            cur[pos] = static_cast<int32_t>(v);
            walk(pos + 1);
            for (int i = 0; i < c.ambient; ++i) rem[i] -= c.points[pos][i];
        }
        for (int i = 0; i < c.ambient; ++i) rem[i] += (cap + 1) * c.points[pos][i];
        cur[pos] = 0;
    };
    walk(0);
    return out;
}

enum class FiberMode {
    gcd,   // edge iff the two monomials share a variable
    ideal  // edge iff one move from a basis element of strictly smaller degree
};

struct FiberGraph {
    std::vector<int64_t> degree;
    std::vector<Monomial> verts;
    std::vector<int> comp;                     // component id per vertex
    int ncomp = 0;
    std::vector<std::vector<int>> components;  // vertex indices per component
};

namespace detail {

// b strictly dominates d coordinatewise.
inline bool strictly_below(const std::vector<int64_t>& d, const std::vector<int64_t>& b) {
    bool lt = false;
    for (size_t i = 0; i < b.size(); ++i) {
        if (d[i] > b[i]) return false;
        if (d[i] < b[i]) lt = true;
    }
    return lt;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace detail

inline FiberGraph fiber_graph(const Configuration& c, const MarkedBasis& gb,
                              const std::vector<int64_t>& b, FiberMode mode,
                              const Limits& lim = {}) {
    FiberGraph g;
    g.degree = b;
    g.verts = fiber(c, b, lim);
    const int nv = static_cast<int>(g.verts.size());
    detail::UnionFind uf(nv);

    if (mode == FiberMode::gcd) {
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                if (!Monomial::coprime(g.verts[i], g.verts[j])) uf.unite(i, j);
    } else {
        std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index(Monomial::lex_less);
        for (int i = 0; i < nv; ++i) index.emplace(g.verts[i], i);
        std::vector<const Binomial*> moves;
        for (const auto& e : gb.elems)
            if (detail::strictly_below(adegree(c, e.lead()), b)) moves.push_back(&e);
        for (int i = 0; i < nv; ++i) {
            for (const Binomial* e : moves) {
                if (!e->lead().divides(g.verts[i])) continue;
                auto it = index.find(g.verts[i].div(e->lead()).mul(e->trail()));
                if (it == index.end())
                    throw std::logic_error("fiber move left the fiber");
                uf.unite(i, it->second);
            }
        }
    }

    std::map<int, int> relabel;
    g.comp.resize(nv);
    for (int i = 0; i < nv; ++i) {
        int r = uf.find(i);
        auto [it, fresh] = relabel.emplace(r, static_cast<int>(relabel.size()));
        g.comp[i] = it->second;
    }
    g.ncomp = static_cast<int>(relabel.size());
    g.components.assign(g.ncomp, {});
    for (int i = 0; i < nv; ++i) g.components[g.comp[i]].push_back(i);
    return g;
}

// Candidate degrees for minimal generation: the A-degrees of any generating
// set contain every Betti degree, so the basis degrees are a safe superset.
inline std::vector<std::vector<int64_t>> candidate_degrees(const Configuration& c,
                                                           const MarkedBasis& gb) {
    std::set<std::vector<int64_t>> s;
    for (const auto& e : gb.elems) s.insert(adegree(c, e.lead()));
    return {s.begin(), s.end()};
}

// Number of spanning trees of the complete multigraph on the components,
// where the pair (i, j) carries |C_i| * |C_j| parallel edges: each tree edge
// also picks which two fiber monomials it bridges. By the matrix-tree
// theorem this is any cofactor of the weighted Laplacian.
inline Int generating_choices(const FiberGraph& g) {
    const int k = g.ncomp;
    if (k <= 1) return 1;
    std::vector<Int> size(k);
    for (int i = 0; i < k; ++i) size[i] = static_cast<int64_t>(g.components[i].size());
    IntMat lap(k - 1, std::vector<Int>(k - 1, 0));
    for (int i = 0; i + 1 < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) {
            if (i == j) {
                Int s = 0;
                for (int t = 0; t < k; ++t)
                    if (t != i) s += size[i] * size[t];
                lap[i][i] = s;
            } else {
                lap[i][j] = -size[i] * size[j];
            }
        }
    }
    return determinant(lap);
}

struct BettiDegree {
    FiberGraph graph;
    Int choices = 1;          // distinct ways to pick this degree's generators
    bool indispensable = false;  // exactly two components, both singletons
};

struct BettiReport {
    std::vector<BettiDegree> degrees;  // disconnected fibers only
    int minimal_generators = 0;        // sum of (components - 1)
    Int generating_sets = 1;           // product of per-degree choices
    std::vector<Binomial> indispensables;
};

inline BettiReport betti_report(const Configuration& c, const MarkedBasis& gb,
                                FiberMode mode = FiberMode::gcd, const Limits& lim = {}) {
    BettiReport r;
    for (const auto& b : candidate_degrees(c, gb)) {
        FiberGraph g = fiber_graph(c, gb, b, mode, lim);
        if (g.ncomp <= 1) continue;
        BettiDegree bd;
        bd.graph = std::move(g);
        bd.choices = generating_choices(bd.graph);
        bd.indispensable = bd.graph.ncomp == 2 && bd.graph.components[0].size() == 1 &&
                           bd.graph.components[1].size() == 1;
        if (bd.indispensable)
            r.indispensables.push_back(Binomial::unmarked(
                bd.graph.verts[bd.graph.components[0][0]], bd.graph.verts[bd.graph.components[1][0]]));
        r.minimal_generators += bd.graph.ncomp - 1;
        r.generating_sets *= bd.choices;
        r.degrees.push_back(std::move(bd));
    }
    return r;
}

inline std::vector<std::vector<int64_t>> betti_degrees(const Configuration& c, const MarkedBasis& gb,
                                                       FiberMode mode = FiberMode::gcd,
                                                       const Limits& lim = {}) {
    std::vector<std::vector<int64_t>> out;
    for (const auto& bd : betti_report(c, gb, mode, lim).degrees) out.push_back(bd.graph.degree);
    return out;
}

namespace detail {

// All spanning trees of the complete graph on k labelled components, as edge
// lists. Component counts stay tiny here, so plain subset search is fine.
inline std::vector<std::vector<std::pair<int, int>>> spanning_trees(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    std::vector<std::vector<std::pair<int, int>>> trees;
    std::vector<std::pair<int, int>> cur;
    std::function<void(size_t)> walk = [&](size_t at) {
        if (static_cast<int>(cur.size()) == k - 1) {
            UnionFind uf(k);
            for (auto [a, b] : cur) {
                if (uf.find(a) == uf.find(b)) return;
                uf.unite(a, b);
            }
            trees.push_back(cur);
            return;
        }
        if (at == edges.size()) return;
        walk(at + 1);
        cur.push_back(edges[at]);
        walk(at + 1);
        cur.pop_back();
    };
    walk(0);
    return trees;
}

} // namespace detail

// The seed-th minimal generating set in a fixed enumeration: per degree, the
// spanning trees of the component graph and then the bridged vertex pair of
// every tree edge are indexed in mixed radix. Seeds range over the total
// count reported by betti_report.
inline std::vector<Binomial> extract_minimal_generating_set(const BettiReport& r, Int seed = 0) {
    if (seed < 0 || seed >= r.generating_sets)
        throw std::invalid_argument("generating set index out of range");
    std::vector<Binomial> out;
    for (const auto& bd : r.degrees) {
        Int local = seed % bd.choices;
        seed /= bd.choices;
        const auto& g = bd.graph;
        Int run = 0;
        bool placed = false;
        for (const auto& tree : detail::spanning_trees(g.ncomp)) {
            Int ways = 1;
            for (auto [a, b] : tree)
                ways *= Int(static_cast<int64_t>(g.components[a].size())) *
                        static_cast<int64_t>(g.components[b].size());
            if (local >= run + ways) {
                run += ways;
                continue;
            }
            Int rest = local - run;
            for (auto [a, b] : tree) {
                int sa = static_cast<int>(g.components[a].size());
                int sb = static_cast<int>(g.components[b].size());
                int pick = static_cast<int>(rest % (sa * sb));
                rest /= sa * sb;
                out.push_back(Binomial::unmarked(g.verts[g.components[a][pick % sa]],
                                                 g.verts[g.components[b][pick / sa]]));
            }
            placed = true;
            break;
        }
        if (!placed) throw std::logic_error("generating set enumeration out of sync");
    }
    return out;
}

// Structural minimality: the set must consist of one spanning forest worth of
// bridges per disconnected fiber degree and nothing else. Degrees, component
// bridging, acyclicity and full coverage are all checked against the report.
inline bool minimality_check(const Configuration& c, const BettiReport& r,
                             const std::vector<Binomial>& gens) {
    std::map<std::vector<int64_t>, const BettiDegree*> by_degree;
    for (const auto& bd : r.degrees) by_degree.emplace(bd.graph.degree, &bd);
    std::map<std::vector<int64_t>, std::vector<const Binomial*>> grouped;
    for (const auto& f : gens) {
        if (!a_homogeneous(c, f)) return false;
        grouped[adegree(c, f.lead())].push_back(&f);
    }
    if (grouped.size() != by_degree.size()) return false;
    for (const auto& [deg, list] : grouped) {
        auto it = by_degree.find(deg);
        if (it == by_degree.end()) return false;
        const FiberGraph& g = it->second->graph;
        if (static_cast<int>(list.size()) != g.ncomp - 1) return false;
        std::map<Monomial, int, bool (*)(const Monomial&, const Monomial&)> index(Monomial::lex_less);
        for (int i = 0; i < static_cast<int>(g.verts.size()); ++i) index.emplace(g.verts[i], i);
        detail::UnionFind uf(g.ncomp);
        int merges = 0;
        for (const Binomial* f : list) {
            auto a = index.find(f->lead()), b = index.find(f->trail());
            if (a == index.end() || b == index.end()) return false;
            int ca = g.comp[a->second], cb = g.comp[b->second];
            if (ca == cb || uf.find(ca) == uf.find(cb)) return false;
            uf.unite(ca, cb);
            ++merges;
        }
        if (merges != g.ncomp - 1) return false;
    }
    return true;
}

} // namespace toricsing

#endif
