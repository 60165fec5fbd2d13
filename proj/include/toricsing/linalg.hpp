#ifndef TORICSING_LINALG_HPP
#define TORICSING_LINALG_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "toricsing/ints.hpp"

namespace toricsing {

using IntMat = std::vector<std::vector<Int>>;

inline IntMat int_mat(const std::vector<std::vector<int64_t>>& m) {
    IntMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    return r;
}

inline IntMat identity_mat(int n) {
    IntMat id(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

// Fraction-free Gaussian elimination. Returns rank; if det is non-null and the
// matrix is square, stores the determinant there.
inline int bareiss(IntMat m, Int* det = nullptr) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    Int prev = 1;
    int sign = 1, rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rank) { std::swap(m[piv], m[rank]); sign = -sign; }
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    if (det) {
        if (rows != cols) throw std::invalid_argument("determinant of non-square matrix");
        *det = (rank == rows) ? Int(sign) * prev : Int(0);
    }
    return rank;
}

inline Int determinant(const IntMat& m) {
    Int d;
    bareiss(m, &d);
    return d;
}

inline int rank(const IntMat& m) { return bareiss(m); }

// Leading principal minor of order k.
inline Int principal_minor(const IntMat& m, int k) {
    IntMat sub(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = m[i][j];
    return determinant(sub);
}

// Sylvester: symmetric M is negative definite iff (-1)^k * minor_k > 0 for all k.
inline bool is_negative_definite(const IntMat& m) {
    int n = static_cast<int>(m.size());
    for (int k = 1; k <= n; ++k) {
        Int d = principal_minor(m, k);
        if (k % 2 == 1) d = -d;
        if (d <= 0) return false;
    }
    return true;
}

// Adjugate of a square matrix: adj(M) * M = det(M) * I. Computed entrywise
// from cofactors; fine at the sizes this library meets (n <= ~60).
inline IntMat adjugate(const IntMat& m) {
    int n = static_cast<int>(m.size());
    IntMat adj(n, std::vector<Int>(n));
    IntMat minor(n - 1, std::vector<Int>(n - 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            Int cof = (n == 1) ? Int(1) : determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;
        }
    }
    return adj;
}

struct SmithResult {
    IntMat d;  // diagonal form
    IntMat u;  // row transform, u * a * v = d
    IntMat v;  // column transform
};

// Smith normal form over Z. Straightforward pivot-and-reduce; invariant-factor
// divisibility is enforced at the end.
inline SmithResult smith_normal_form(IntMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SmithResult s{a, identity_mat(rows), identity_mat(cols)};
    auto& d = s.d;
    auto& u = s.u;
    auto& v = s.v;

    auto row_op = [&](int dst, int src, const Int& q) {
        for (int c = 0; c < cols; ++c) d[dst][c] -= q * d[src][c];
        for (int c = 0; c < rows; ++c) u[dst][c] -= q * u[src][c];
    };
    auto col_op = [&](int dst, int src, const Int& q) {
        for (int r = 0; r < rows; ++r) d[r][dst] -= q * d[r][src];
        for (int r = 0; r < cols; ++r) v[r][dst] -= q * v[r][src];
    };
    auto swap_rows = [&](int i, int j) { std::swap(d[i], d[j]); std::swap(u[i], u[j]); };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(d[r][i], d[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
    };

    auto negate_row = [&](int i) {
        for (int c = 0; c < cols; ++c) d[i][c] = -d[i][c];
        for (int c = 0; c < rows; ++c) u[i][c] = -u[i][c];
    };

    int t = 0;
    int lim = std::min(rows, cols);
    while (t < lim) {
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (d[r][c] != 0 && (pr < 0 || abs(d[r][c]) < best)) {
                    best = abs(d[r][c]);
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        if (pr != t) swap_rows(pr, t);
        if (pc != t) swap_cols(pc, t);

        bool clean = true;
        for (int r = t + 1; r < rows; ++r) {
            if (d[r][t] == 0) continue;
            row_op(r, t, d[r][t] / d[t][t]);
            if (d[r][t] != 0) clean = false;
        }
        for (int c = t + 1; c < cols; ++c) {
            if (d[t][c] == 0) continue;
            col_op(c, t, d[t][c] / d[t][t]);
            if (d[t][c] != 0) clean = false;
        }
        if (!clean) continue;  // a strictly smaller pivot now exists in the block
        if (d[t][t] < 0) negate_row(t);
        ++t;
    }

    // Enforce d[i][i] | d[i+1][i+1]. Each fix replaces the pair (a, b) by
    // (gcd(a,b), ab/gcd(a,b)): fold column i+1 into column i, run Euclid on
    // the two rows, then clear the off-diagonal residue, which gcd(a,b)
    // divides because every block entry stays an integer combination of a, b.
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i) {
            if (d[i + 1][i + 1] % d[i][i] == 0) continue;
            changed = true;
            col_op(i, i + 1, Int(-1));
            while (d[i + 1][i] != 0) {
                row_op(i + 1, i, d[i + 1][i] / d[i][i]);
                if (d[i + 1][i] != 0) swap_rows(i, i + 1);
            }
            if (d[i][i + 1] != 0) col_op(i + 1, i, d[i][i + 1] / d[i][i]);
            if (d[i][i] < 0) negate_row(i);
            if (d[i + 1][i + 1] < 0) negate_row(i + 1);
        }
    }
    return s;
}

// Basis of { x : a * x = 0 } over Z as rows. Columns of v beyond rank(a) in
// the Smith decomposition span the kernel saturated in Z^n.
inline std::vector<std::vector<Int>> kernel_basis(const IntMat& a) {
    if (a.empty()) return {};
    int cols = static_cast<int>(a[0].size());
    SmithResult s = smith_normal_form(a);
    int r = 0;
    int lim = std::min(static_cast<int>(s.d.size()), cols);
    for (int i = 0; i < lim; ++i)
        if (s.d[i][i] != 0) ++r;
    std::vector<std::vector<Int>> basis;
    for (int j = r; j < cols; ++j) {
        std::vector<Int> col(cols);
        for (int i = 0; i < cols; ++i) col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

// Solve m * x = b exactly over Q for square nonsingular m; returns x as
// rationals.
inline std::vector<Rat> solve_rational(const IntMat& m, const std::vector<Int>& b) {
    int n = static_cast<int>(m.size());
    Int det = determinant(m);
    if (det == 0) throw std::invalid_argument("singular system");
    IntMat adj = adjugate(m);
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) {
        Int num = 0;
        for (int j = 0; j < n; ++j) num += adj[i][j] * b[j];
        x[i] = Rat(num, det);
    }
    return x;
}

} // namespace toricsing

#endif
