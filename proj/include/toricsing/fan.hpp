#ifndef TORICSING_FAN_HPP
#define TORICSING_FAN_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "toricsing/groebner.hpp"
#include "toricsing/lp.hpp"
#include "toricsing/parallel.hpp"
#include "toricsing/toric.hpp"

namespace toricsing {

struct FanCone {
    MarkedBasis gb;                   // reduced basis selecting this cone
    std::vector<Monomial> initials;   // minimal generators of the initial ideal
    std::vector<int> neighbors;       // cone indices, one per facet
};

struct FanResult {
    std::vector<FanCone> cones;
    bool complete = false;
};

namespace detail {

inline std::vector<std::vector<int32_t>> initial_key(const std::vector<Monomial>& gens) {
    std::vector<std::vector<int32_t>> key;
    for (const auto& m : gens) key.push_back(m.exponents());
    std::sort(key.begin(), key.end());
    return key;
}

// Primitive, deduplicated facet candidate directions of the closed cone
// { w : (lead - trail) . w >= 0 } of a reduced basis.
inline std::vector<std::vector<int64_t>> cone_constraints(const MarkedBasis& gb) {
    std::vector<std::vector<int64_t>> us;
    for (const auto& g : gb.elems) {
        std::vector<int64_t> u = g.direction();
        int64_t d = 0;
        for (int64_t x : u) d = std::gcd(d, std::abs(x));
        for (int64_t& x : u) x /= d;
        if (std::find(us.begin(), us.end(), u) == us.end()) us.push_back(std::move(u));
    }
    return us;
}

inline std::vector<Rat> rat_row(const std::vector<int64_t>& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Constraint j is a facet iff dropping it widens the cone, i.e. some w has
// u_j . w <= -1 while all other constraints stay nonnegative.
inline bool is_facet(const std::vector<std::vector<int64_t>>& us, size_t j) {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (size_t i = 0; i < us.size(); ++i) {
        if (i == j) continue;
        a.push_back(rat_row(us[i]));
        b.push_back(Rat(0));
    }
    std::vector<Rat> neg(us[j].size());
    for (size_t i = 0; i < us[j].size(); ++i) neg[i] = Rat(-us[j][i]);
    a.push_back(std::move(neg));
    b.push_back(Rat(1));
    return feasible_point_exact(a, b).status == LPStatus::feasible;
}

// A point in the relative interior of facet j: on its hyperplane, strictly
// inside every other facet.
inline std::vector<Rat> facet_interior(const std::vector<std::vector<int64_t>>& facets, size_t j) {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (size_t i = 0; i < facets.size(); ++i) {
        if (i == j) continue;
        a.push_back(rat_row(facets[i]));
        b.push_back(Rat(1));
    }
    auto out = feasible_point_exact(a, b, {rat_row(facets[j])}, {Rat(0)});
    if (out.status != LPStatus::feasible)
        throw std::logic_error("facet of a full-dimensional cone has empty interior");
    return out.x;
}

// Term order whose generic weight sits just past facet j, seen from inside
// the cone: the facet point first (pushed into the positive orthant along
// the grading, which lies in the lineality space of every cone here and so
// changes nothing), then the outward direction, then lex.
inline TermOrder flip_order(const Configuration& c, std::vector<Rat> w,
                            const std::vector<int64_t>& u) {
    std::vector<int64_t> g = positive_grading(c);
    Rat lambda(0);
    for (size_t i = 0; i < w.size(); ++i) {
        Rat need = (Rat(1) - w[i]) / Rat(g[i]);
        if (need > lambda) lambda = need;
    }
    for (size_t i = 0; i < w.size(); ++i) w[i] += lambda * Rat(g[i]);

    Int scale = 1;
    for (const Rat& x : w) scale = lcm(scale, Int(denominator(x)));
    std::vector<int64_t> row1(w.size()), row2(u.size());
    for (size_t i = 0; i < w.size(); ++i)
        row1[i] = to_int64_checked(Int(numerator(w[i])) * (scale / Int(denominator(w[i]))));
    for (size_t i = 0; i < u.size(); ++i) row2[i] = -u[i];
    std::vector<int> perm(w.size());
    std::iota(perm.begin(), perm.end(), 0);
    return TermOrder::matrix({row1, row2}, perm, OrderKind::lex);
}

} // namespace detail

// Breadth-first walk of the Groebner fan, one full-dimensional cone per
// distinct initial ideal, crossing every facet once. The ideal is positively
// multigraded, so its fan covers weight space and the walk is exhaustive;
// `complete` reports whether it finished within lim.max_cones.
inline FanResult groebner_fan(const Configuration& c, const TermOrder& start,
                              const Limits& lim = {}) {
    FanResult fan;
    std::map<std::vector<std::vector<int32_t>>, int> seen;

    auto intern = [&](MarkedBasis gb) {
        std::vector<Monomial> ini = initial_ideal(gb);
        auto key = detail::initial_key(ini);
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        int id = static_cast<int>(fan.cones.size());
        seen.emplace(std::move(key), id);
        fan.cones.push_back({std::move(gb), std::move(ini), {}});
        return id;
    };

    intern(toric_ideal(c, start, lim));
    for (int at = 0; at < static_cast<int>(fan.cones.size()); ++at) {
        if (static_cast<int>(fan.cones.size()) > lim.max_cones) return fan;
        auto us = detail::cone_constraints(fan.cones[at].gb);
        std::vector<std::vector<int64_t>> facets;
        for (size_t j = 0; j < us.size(); ++j)
            if (detail::is_facet(us, j)) facets.push_back(us[j]);
        for (size_t j = 0; j < facets.size(); ++j) {
            std::vector<Rat> w = detail::facet_interior(facets, j);
            TermOrder o = detail::flip_order(c, std::move(w), facets[j]);
            std::vector<Binomial> gens(fan.cones[at].gb.elems);
            int to = intern(buchberger(gens, o, fan.cones[at].gb.vars, lim));
            fan.cones[at].neighbors.push_back(to);
        }
    }
    fan.complete = true;
    return fan;
}

// Reduced bases for uniformly random integer weight vectors in [1, 10^4]^N,
// deduplicated by initial ideal. A lower bound probe of the fan: every cone
// it returns is a cone of the full fan.
inline FanResult sample_initial_ideals(const Configuration& c, int samples, uint64_t seed,
                                       int jobs = 1, const Limits& lim = {}) {
    std::vector<std::vector<int64_t>> weights(samples);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> dist(1, 10000);
    for (auto& w : weights) {
        w.resize(c.size());
        for (auto& x : w) x = dist(rng);
    }
    MarkedBasis base = toric_ideal(c, TermOrder(OrderKind::grevlex, c.size()), lim);
    std::vector<MarkedBasis> bases = parallel_map<MarkedBasis>(samples, jobs, [&](int i) {
        std::vector<int> perm(c.size());
        std::iota(perm.begin(), perm.end(), 0);
        return buchberger(base.elems, TermOrder::weighted(weights[i], perm), c.vars, lim);
    });

    FanResult fan;
    std::map<std::vector<std::vector<int32_t>>, int> seen;
    for (auto& gb : bases) {
        std::vector<Monomial> ini = initial_ideal(gb);
        auto key = detail::initial_key(ini);
        if (seen.emplace(std::move(key), static_cast<int>(fan.cones.size())).second)
            fan.cones.push_back({std::move(gb), std::move(ini), {}});
    }
    return fan;
}

inline std::vector<int> squarefree_initials(const FanResult& fan) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(fan.cones.size()); ++i)
        if (all_squarefree(fan.cones[i].initials)) out.push_back(i);
    return out;
}

} // namespace toricsing

#endif
