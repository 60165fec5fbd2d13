#ifndef TORICSING_LP_HPP
#define TORICSING_LP_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toricsing/ints.hpp"

namespace toricsing {

enum class LPStatus { feasible, infeasible, unknown };

template <class T>
struct LPOutcome {
    LPStatus status = LPStatus::unknown;
    std::vector<T> x;
};

namespace detail {

template <class T>
struct lp_scalar;

template <>
struct lp_scalar<double> {
    static bool neg(double v) { return v < -1e-9; }
    static bool pos(double v) { return v > 1e-9; }
    static bool essentially_zero(double v) { return std::fabs(v) <= 1e-7; }
};

template <>
struct lp_scalar<Rat> {
    static bool neg(const Rat& v) { return v < 0; }
    static bool pos(const Rat& v) { return v > 0; }
    static bool essentially_zero(const Rat& v) { return v == 0; }
};

// Phase-1 simplex with Bland's rule on { x free : A x >= b, Aeq x = beq }.
// Free variables are split as x = xp - xn. Every row gets an artificial
// variable; feasibility holds iff the artificial sum minimizes to zero.
template <class T>
LPOutcome<T> phase1(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
                    const std::vector<std::vector<T>>& aeq, const std::vector<T>& beq,
                    long long iter_cap) {
    const int n = a.empty() ? (aeq.empty() ? 0 : static_cast<int>(aeq[0].size()))
                            : static_cast<int>(a[0].size());
    const int mi = static_cast<int>(a.size());
    const int me = static_cast<int>(aeq.size());
    const int m = mi + me;
    const int col_xn = n;          // x negative parts
    const int col_s = 2 * n;       // surplus, inequality rows only
    const int col_art = 2 * n + mi;
    const int ncols = col_art + m; // + rhs held separately

    std::vector<std::vector<T>> tab(m, std::vector<T>(ncols, T(0)));
    std::vector<T> rhs(m, T(0));
    for (int i = 0; i < m; ++i) {
        const auto& row = (i < mi) ? a[i] : aeq[i - mi];
        T bi = (i < mi) ? b[i] : beq[i - mi];
        T sgn = T(1);
        if (lp_scalar<T>::neg(bi)) sgn = T(-1);
        for (int j = 0; j < n; ++j) {
            tab[i][j] = sgn * row[j];
            tab[i][col_xn + j] = -sgn * row[j];
        }
        if (i < mi) tab[i][col_s + i] = -sgn;
        tab[i][col_art + i] = T(1);
        rhs[i] = sgn * bi;
    }

    std::vector<T> obj(ncols, T(0));
    T objval = T(0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < col_art; ++j) obj[j] -= tab[i][j];
        objval -= rhs[i];
    }

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = col_art + i;

    for (long long iter = 0;; ++iter) {
        if (iter > iter_cap) return {LPStatus::unknown, {}};
        int enter = -1;
        for (int j = 0; j < col_art; ++j)
            if (lp_scalar<T>::neg(obj[j])) { enter = j; break; }
        if (enter < 0) break;

        int leave = -1;
        T best = T(0);
        for (int i = 0; i < m; ++i) {
            if (!lp_scalar<T>::pos(tab[i][enter])) continue;
            T ratio = rhs[i] / tab[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) return {LPStatus::unknown, {}};  // phase-1 is bounded; numeric trouble

        T piv = tab[leave][enter];
        for (int j = 0; j < ncols; ++j) tab[leave][j] /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            T f = tab[i][enter];
            if (f == T(0)) continue;
            for (int j = 0; j < ncols; ++j) tab[i][j] -= f * tab[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        T f = obj[enter];
        if (f != T(0)) {
            for (int j = 0; j < ncols; ++j) obj[j] -= f * tab[leave][j];
            objval -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    // objval tracks -z; feasible iff z == 0.
    if (!lp_scalar<T>::essentially_zero(objval)) return {LPStatus::infeasible, {}};

    std::vector<T> x(n, T(0));
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] += rhs[i];
        else if (basis[i] < 2 * n) x[basis[i] - n] -= rhs[i];
    }
    return {LPStatus::feasible, std::move(x)};
}

} // namespace detail

// Exact feasibility of { x : a x >= b, aeq x = beq } over the rationals.
// Never returns unknown: Bland's rule terminates.
inline LPOutcome<Rat> feasible_point_exact(const std::vector<std::vector<Rat>>& a,
                                           const std::vector<Rat>& b,
                                           const std::vector<std::vector<Rat>>& aeq = {},
                                           const std::vector<Rat>& beq = {}) {
    auto out = detail::phase1<Rat>(a, b, aeq, beq, (1LL << 62));
    if (out.status == LPStatus::unknown)
        throw std::logic_error("exact simplex did not terminate");
    return out;
}

// Floating-point fast path; advisory only. Callers must verify any returned
// point exactly and treat infeasible/unknown as a cue to run the exact solver.
inline LPOutcome<double> feasible_point_double(const std::vector<std::vector<double>>& a,
                                               const std::vector<double>& b,
                                               const std::vector<std::vector<double>>& aeq = {},
                                               const std::vector<double>& beq = {}) {
    return detail::phase1<double>(a, b, aeq, beq, 200000);
}

// Nearest rational with denominator 2^bits.
inline Rat rationalize(double v, int bits = 24) {
    double scaled = std::ldexp(v, bits);
    if (!std::isfinite(scaled)) throw std::invalid_argument("rationalize: non-finite value");
    long long num = std::llround(scaled);
    return Rat(Int(num), Int(1) << bits);
}

} // namespace toricsing

#endif
