#ifndef TORICSING_TORIC_HPP
#define TORICSING_TORIC_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "toricsing/dynkin.hpp"
#include "toricsing/groebner.hpp"
#include "toricsing/ints.hpp"
#include "toricsing/linalg.hpp"

namespace toricsing {

// Multidegree of x^e under the grading deg(x_j) = a_j.
inline std::vector<int64_t> adegree(const Configuration& c, const Monomial& m) {
    std::vector<int64_t> d(c.ambient, 0);
    for (int j = 0; j < c.size(); ++j) {
        if (m[j] == 0) continue;
        for (int i = 0; i < c.ambient; ++i) d[i] += static_cast<int64_t>(m[j]) * c.points[j][i];
    }
    return d;
}

inline bool a_homogeneous(const Configuration& c, const Binomial& b) {
    return adegree(c, b.lead()) == adegree(c, b.trail());
}

// Total A-degree of each variable; strictly positive, so it grades the ring
// positively and can head a matrix term order.
inline std::vector<int64_t> positive_grading(const Configuration& c) {
    std::vector<int64_t> w(c.size());
    for (int j = 0; j < c.size(); ++j) {
        int64_t s = 0;
        for (int i = 0; i < c.ambient; ++i) s += c.points[j][i];
        if (s <= 0) throw std::invalid_argument("configuration contains the zero point");
        w[j] = s;
    }
    return w;
}

// Basis of the integer kernel of the point matrix (points as columns); the
// Smith-form kernel is automatically saturated in Z^N.
inline std::vector<std::vector<Int>> lattice_kernel(const Configuration& c) {
    IntMat a(c.ambient, std::vector<Int>(c.size()));
    for (int i = 0; i < c.ambient; ++i)
        for (int j = 0; j < c.size(); ++j) a[i][j] = c.points[j][i];
    return kernel_basis(a);
}

inline Binomial binomial_from_vector(const std::vector<Int>& u) {
    const int n = static_cast<int>(u.size());
    std::vector<int32_t> pos(n, 0), neg(n, 0);
    for (int i = 0; i < n; ++i) {
        int64_t v = to_int64_checked(u[i]);
        if (v > 0) pos[i] = static_cast<int32_t>(v);
        if (v < 0) neg[i] = static_cast<int32_t>(-v);
    }
    return Binomial::unmarked(Monomial(std::move(pos)), Monomial(std::move(neg)));
}

inline std::vector<Binomial> lattice_basis_binomials(const Configuration& c) {
    std::vector<Binomial> out;
    for (const auto& u : lattice_kernel(c)) out.push_back(binomial_from_vector(u));
    return out;
}

// Total A-degree first, then smaller exponent on x_cheapest, then graded
// reverse lex. The penalty row must come directly after the grading: among
// monomials of equal A-degree the one with the smaller x_cheapest exponent
// has to win, or dividing a basis element by its x_cheapest power would
// change the lead and the saturation step below would silently drop ideal
// members. Once the exponent on x_cheapest is pinned any tie break works,
// and grevlex keeps the intermediate bases small.
inline TermOrder saturation_order(const Configuration& c, int cheapest) {
    std::vector<int64_t> penalty(c.size(), 0);
    penalty[cheapest] = -1;
    std::vector<int> perm(c.size());
    std::iota(perm.begin(), perm.end(), 0);
    return TermOrder::matrix({positive_grading(c), std::move(penalty)}, std::move(perm),
                             OrderKind::grevlex);
}

inline Binomial strip_variable(const Binomial& b, int i) {
    int32_t t = std::min(b.lead()[i], b.trail()[i]);
    if (t == 0) return Binomial::unmarked(b.lead(), b.trail());
    Monomial p = Monomial::var(b.nvars(), i, t);
    return Binomial::unmarked(b.lead().div(p), b.trail().div(p));
}

// Reduced Groebner basis of the toric ideal of the configuration: start from
// a lattice basis, saturate variable by variable, then change to the target
// order. A reduced basis of the saturated ideal has coprime sides on every
// element; if that ever fails the sweep reruns, and two sweeps are already
// one more than the theory needs.
inline MarkedBasis toric_ideal(const Configuration& c, const TermOrder& o, const Limits& lim = {}) {
    std::vector<Binomial> gens = lattice_basis_binomials(c);
    if (gens.empty()) return MarkedBasis{c.vars, {}, true};

    for (int sweep = 0; sweep < 3; ++sweep) {
        for (int i = 0; i < c.size(); ++i) {
            MarkedBasis g = buchberger(gens, saturation_order(c, i), c.vars, lim);
            gens.clear();
            for (const auto& b : g.elems) gens.push_back(strip_variable(b, i));
        }
        MarkedBasis out = buchberger(gens, o, c.vars, lim);
        bool coprime = std::all_of(out.elems.begin(), out.elems.end(), [](const Binomial& b) {
            return Monomial::coprime(b.lead(), b.trail());
        });
        if (coprime) return out;
        gens.assign(out.elems.begin(), out.elems.end());
    }
    throw std::logic_error("saturation did not stabilize");
}

inline bool in_ideal(const Binomial& f, const MarkedBasis& gb, const Limits& lim = {}) {
    StepCounter sc{lim.reduction_steps};
    return reduces_to_zero(f, gb, sc);
}

// Mutual membership of two verified bases over the same ring.
inline bool ideals_equal(const MarkedBasis& a, const MarkedBasis& b, const Limits& lim = {}) {
    StepCounter sc{lim.reduction_steps};
    for (const auto& f : a.elems)
        if (!reduces_to_zero(f, b, sc)) return false;
    for (const auto& g : b.elems)
        if (!reduces_to_zero(g, a, sc)) return false;
    return true;
}

// Monomials of total degree <= maxdeg outside the initial ideal. The walk
// fixes exponents left to right and tests leads as soon as their support is
// complete, so divisible branches are cut early.
inline std::vector<Monomial> standard_monomials_up_to(const MarkedBasis& gb, int64_t maxdeg,
                                                      const Limits& lim = {}) {
    const int n = gb.nvars();
    std::vector<std::vector<const Monomial*>> by_maxvar(n + 1);
    for (const auto& g : gb.elems) {
        int mv = -1;
        for (int j = 0; j < n; ++j)
            if (g.lead()[j] > 0) mv = j;
        by_maxvar[mv + 1].push_back(&g.lead());
    }
    StepCounter sc{lim.fiber_cap};
    std::vector<Monomial> out;
    std::vector<int32_t> cur(n, 0);
    std::function<void(int, int64_t)> walk = [&](int pos, int64_t left) {
        for (const Monomial* l : by_maxvar[pos]) {
            bool div = true;
            for (int j = 0; j < pos && div; ++j) div = (*l)[j] <= cur[j];
            if (div) return;
        }
        if (pos == n) {
            sc.charge("standard monomial enumeration");
            out.emplace_back(cur);
            return;
        }
        for (int32_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            walk(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    walk(0, maxdeg);
    return out;
}

// Injectivity of the monomial map on standard monomials through one degree
// past the basis: no two standard monomials may share an A-degree, and every
// element must be A-homogeneous. Together these pin the basis to the toric
// ideal of the configuration in the window that determines it.
inline bool lemma11_check(const Configuration& c, const MarkedBasis& gb, const Limits& lim = {}) {
    for (const auto& g : gb.elems)
        if (!a_homogeneous(c, g)) return false;
    int64_t maxdeg = 0;
    for (const auto& g : gb.elems)
        maxdeg = std::max({maxdeg, g.lead().degree(), g.trail().degree()});
    std::map<std::vector<int64_t>, const Monomial*> seen;
    for (const auto& m : standard_monomials_up_to(gb, maxdeg + 1, lim)) {
        auto [it, fresh] = seen.try_emplace(adegree(c, m), &m);
        if (!fresh) return false;
    }
    return true;
}

} // namespace toricsing

#endif
