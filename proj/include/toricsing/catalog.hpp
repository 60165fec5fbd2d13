#pragma once

// The published marked bases for the D and E families, the closed-form
// cardinality and dimension data that goes with them, and a verifier that
// replays every claim against an independent computation of the toric ideal.
//
// Tables are emitted with the printed marking: the first monomial of each
// row is the leading term. Two rows of the E6 table are off by an exponent
// or an index as printed; catalog_table keeps them verbatim, catalog_fixes
// records the corrections, and catalog_basis applies them.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "dynkin.hpp"
#include "groebner.hpp"
#include "ints.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "toric.hpp"

namespace toricsing {

namespace detail {

// Factors are (0-based variable index, exponent) pairs.
inline Monomial table_mono(int nvars, std::initializer_list<std::pair<int, int>> factors) {
    std::vector<int32_t> e(nvars, 0);
    for (auto [idx, c] : factors) {
        if (idx < 0 || idx >= nvars) throw std::logic_error("table monomial index out of range");
        e[idx] += static_cast<int32_t>(c);
    }
    return Monomial(std::move(e));
}

inline Int int_pow(Int base, long long exp) {
    Int r = 1;
    for (; exp > 0; --exp) r *= base;
    return r;
}

}  // namespace detail

inline MarkedBasis d_even_table(int n) {
    DEvenLayout lay(n);
    int N = lay.size();
    auto M = [&](std::initializer_list<std::pair<int, int>> f) { return detail::table_mono(N, f); };
    std::vector<Binomial> rows;
    auto row = [&](Monomial a, Monomial b) {
        rows.push_back(Binomial::marked(std::move(a), std::move(b)));
    };
    const auto& J = lay.J;
    int t = static_cast<int>(J.size());
    int x1 = lay.idx_vertex(1), xn = lay.idx_vertex(n);

    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            for (int c = b + 1; c < t; ++c)
                for (int d = c + 1; d < t; ++d) {
                    int i = J[a], j = J[b], k = J[c], l = J[d];
                    row(M({{lay.idx_pair(i, k), 1}, {lay.idx_pair(j, l), 1}}),
                        M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(k, l), 1}}));
                    row(M({{lay.idx_pair(i, l), 1}, {lay.idx_pair(j, k), 1}}),
                        M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(k, l), 1}}));
                }
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            for (int c = b + 1; c < t; ++c) {
                int i = J[a], j = J[b], k = J[c];
                row(M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(i, k), 1}}),
                    M({{lay.idx_vertex(i), 1}, {lay.idx_pair(j, k), 1}}));
                row(M({{lay.idx_vertex(j), 1}, {lay.idx_pair(i, k), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(j, k), 1}}));
                row(M({{lay.idx_vertex(k), 1}, {lay.idx_pair(i, j), 1}}),
                    M({{lay.idx_pair(i, k), 1}, {lay.idx_pair(j, k), 1}}));
                row(M({{lay.idx_pair(j, k), 1}, {lay.idx_y(i), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_y(k), 1}}));
                row(M({{lay.idx_pair(i, k), 1}, {lay.idx_y(j), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_y(k), 1}}));
            }
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b) {
            int i = J[a], j = J[b];
            row(M({{lay.idx_vertex(i), 1}, {lay.idx_vertex(j), 1}}), M({{lay.idx_pair(i, j), 2}}));
            row(M({{lay.idx_vertex(j), 1}, {lay.idx_y(i), 1}}),
                M({{lay.idx_pair(i, j), 1}, {lay.idx_y(j), 1}}));
            row(M({{lay.idx_pair(i, j), 1}, {lay.idx_y(i), 1}}),
                M({{lay.idx_vertex(i), 1}, {lay.idx_y(j), 1}}));
            row(M({{lay.idx_pair(i, j), 1}, {x1, 1}, {xn, 1}}),
                M({{lay.idx_y(i), 1}, {lay.idx_y(j), 1}}));
        }
    for (int i : J)
        row(M({{lay.idx_vertex(i), 1}, {x1, 1}, {xn, 1}}), M({{lay.idx_y(i), 2}}));

    MarkedBasis mb;
    mb.vars = d_even_configuration(n).vars;
    mb.elems = std::move(rows);
    return mb;
}

inline MarkedBasis d_odd_table(int n) {
    DOddLayout lay(n, true);
    int N = lay.size();
    auto M = [&](std::initializer_list<std::pair<int, int>> f) { return detail::table_mono(N, f); };
    std::vector<Binomial> rows;
    auto row = [&](Monomial a, Monomial b) {
        rows.push_back(Binomial::marked(std::move(a), std::move(b)));
    };
    const auto& J = lay.J;
    int t = static_cast<int>(J.size());
    int x1 = lay.idx_vertex(1), xn = lay.idx_vertex(n), tn = lay.idx_t();

    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            for (int c = b + 1; c < t; ++c)
                for (int d = c + 1; d < t; ++d) {
                    int i = J[a], j = J[b], k = J[c], l = J[d];
                    row(M({{lay.idx_pair(i, k), 1}, {lay.idx_pair(j, l), 1}}),
                        M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(k, l), 1}}));
                    row(M({{lay.idx_pair(i, l), 1}, {lay.idx_pair(j, k), 1}}),
                        M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(k, l), 1}}));
                }
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b)
            for (int c = b + 1; c < t; ++c) {
                int i = J[a], j = J[b], k = J[c];
                row(M({{lay.idx_pair(j, k), 1}, {lay.idx_z(i), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_z(k), 1}}));
                row(M({{lay.idx_pair(i, k), 1}, {lay.idx_z(j), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_z(k), 1}}));
                row(M({{lay.idx_pair(j, k), 1}, {lay.idx_w(i), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_w(k), 1}}));
                row(M({{lay.idx_pair(i, k), 1}, {lay.idx_w(j), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_w(k), 1}}));
                row(M({{lay.idx_vertex(j), 1}, {lay.idx_pair(i, k), 1}}),
                    M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(j, k), 1}}));
                row(M({{lay.idx_pair(i, j), 1}, {lay.idx_pair(i, k), 1}}),
                    M({{lay.idx_vertex(i), 1}, {lay.idx_pair(j, k), 1}}));
                row(M({{lay.idx_vertex(k), 1}, {lay.idx_pair(i, j), 1}}),
                    M({{lay.idx_pair(i, k), 1}, {lay.idx_pair(j, k), 1}}));
            }
    for (int a = 0; a < t; ++a)
        for (int b = a + 1; b < t; ++b) {
            int i = J[a], j = J[b];
            row(M({{lay.idx_vertex(i), 1}, {lay.idx_vertex(j), 1}}), M({{lay.idx_pair(i, j), 2}}));
            row(M({{lay.idx_pair(i, j), 1}, {x1, 1}}), M({{lay.idx_z(i), 1}, {lay.idx_z(j), 1}}));
            row(M({{lay.idx_pair(i, j), 1}, {xn, 1}}), M({{lay.idx_w(i), 1}, {lay.idx_w(j), 1}}));
            row(M({{lay.idx_pair(i, j), 1}, {lay.idx_z(i), 1}}),
                M({{lay.idx_vertex(i), 1}, {lay.idx_z(j), 1}}));
            row(M({{lay.idx_pair(i, j), 1}, {lay.idx_w(i), 1}}),
                M({{lay.idx_vertex(i), 1}, {lay.idx_w(j), 1}}));
            row(M({{lay.idx_vertex(j), 1}, {lay.idx_z(i), 1}}),
                M({{lay.idx_pair(i, j), 1}, {lay.idx_z(j), 1}}));
            row(M({{lay.idx_vertex(j), 1}, {lay.idx_w(i), 1}}),
                M({{lay.idx_pair(i, j), 1}, {lay.idx_w(j), 1}}));
            row(M({{lay.idx_z(j), 1}, {lay.idx_w(i), 1}}), M({{lay.idx_z(i), 1}, {lay.idx_w(j), 1}}));
            row(M({{lay.idx_z(i), 1}, {lay.idx_w(j), 1}}), M({{tn, 2}, {lay.idx_pair(i, j), 1}}));
        }
    for (int i : J) {
        row(M({{lay.idx_vertex(i), 1}, {x1, 1}}), M({{lay.idx_z(i), 2}}));
        row(M({{lay.idx_vertex(i), 1}, {xn, 1}}), M({{lay.idx_w(i), 2}}));
        row(M({{lay.idx_z(i), 1}, {lay.idx_w(i), 1}}), M({{tn, 2}, {lay.idx_vertex(i), 1}}));
        row(M({{lay.idx_w(i), 1}, {x1, 1}}), M({{tn, 2}, {lay.idx_z(i), 1}}));
        row(M({{lay.idx_y1(i), 1}}), M({{tn, 1}, {lay.idx_z(i), 1}}));
        row(M({{lay.idx_yn(i), 1}}), M({{tn, 1}, {lay.idx_w(i), 1}}));
        row(M({{lay.idx_z(i), 1}, {xn, 1}}), M({{tn, 2}, {lay.idx_w(i), 1}}));
    }
    row(M({{x1, 1}, {xn, 1}}), M({{tn, 4}}));

    MarkedBasis mb;
    mb.vars = d_odd_configuration(n, true).vars;
    mb.elems = std::move(rows);
    return mb;
}

namespace detail {

// Rows are (lead factors, trail factors) with 1-based variable labels.
using TableRow =
    std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;

inline const std::vector<TableRow>& e6_rows() {
    static const std::vector<TableRow> rows = {
        {{{7, 1}, {10, 1}}, {{8, 1}, {9, 1}}},
        {{{13, 1}, {10, 1}}, {{14, 1}, {8, 1}}},
        {{{13, 1}, {9, 1}}, {{14, 1}, {7, 1}}},
        {{{12, 1}, {14, 1}}, {{8, 1}, {9, 1}, {10, 1}}},
        {{{12, 1}, {13, 1}}, {{8, 2}, {9, 1}}},
        {{{11, 1}, {10, 1}}, {{12, 1}, {9, 1}}},
        {{{11, 1}, {8, 1}}, {{12, 1}, {7, 1}}},
        {{{11, 1}, {14, 1}}, {{8, 1}, {9, 2}}},
        {{{11, 1}, {13, 1}}, {{7, 1}, {8, 1}, {9, 1}}},
        {{{5, 1}, {9, 1}}, {{12, 1}, {10, 1}}},
        {{{5, 1}, {7, 1}}, {{12, 1}, {8, 1}}},
        {{{5, 1}, {14, 1}}, {{8, 1}, {10, 2}}},
        {{{5, 1}, {13, 1}}, {{8, 2}, {10, 1}}},
        {{{5, 1}, {11, 1}}, {{12, 2}}},
        {{{4, 1}, {8, 1}}, {{14, 1}, {10, 1}}},
        {{{4, 1}, {7, 1}}, {{14, 1}, {9, 1}}},
        {{{4, 1}, {13, 1}}, {{14, 2}}},
        {{{4, 1}, {12, 1}}, {{9, 1}, {10, 2}}},
        {{{4, 1}, {11, 1}}, {{9, 2}, {10, 1}}},
        {{{4, 1}, {5, 1}}, {{10, 3}}},
        {{{2, 1}, {10, 1}}, {{11, 1}, {9, 1}}},
        {{{2, 1}, {8, 1}}, {{11, 1}, {7, 1}}},
        {{{2, 1}, {14, 1}}, {{7, 1}, {9, 2}}},
        {{{2, 1}, {13, 1}}, {{7, 2}, {9, 1}}},
        {{{2, 1}, {12, 1}}, {{11, 2}}},
        {{{2, 1}, {5, 1}}, {{11, 1}, {12, 1}}},
        {{{2, 1}, {4, 1}}, {{9, 3}}},
        {{{1, 1}, {10, 1}}, {{13, 1}, {8, 1}}},
        {{{1, 1}, {9, 1}}, {{13, 1}, {7, 1}}},
        {{{1, 1}, {14, 1}}, {{13, 3}}},
        {{{1, 1}, {11, 1}}, {{7, 1}, {8, 2}}},
        {{{1, 1}, {11, 1}}, {{7, 2}, {8, 1}}},
        {{{1, 1}, {5, 1}}, {{8, 3}}},
        {{{1, 1}, {4, 1}}, {{13, 1}, {14, 1}}},
        {{{1, 1}, {2, 1}}, {{7, 3}}},
    };
    return rows;
}

inline const std::vector<TableRow>& e7_rows() {
    static const std::vector<TableRow> rows = {
        {{{7, 1}, {8, 1}}, {{9, 1}, {10, 1}}},
        {{{6, 1}, {9, 1}}, {{8, 1}, {10, 1}}},
        {{{6, 1}, {7, 1}}, {{10, 2}}},
        {{{4, 1}, {10, 1}}, {{8, 1}, {9, 1}}},
        {{{4, 1}, {7, 1}}, {{9, 2}}},
        {{{4, 1}, {6, 1}}, {{8, 2}}},
    };
    return rows;
}

inline Monomial labeled_mono(int nvars, const std::vector<std::pair<int, int>>& factors) {
    std::vector<int32_t> e(nvars, 0);
    for (auto [label, c] : factors) {
        if (label < 1 || label > nvars) throw std::logic_error("table label out of range");
        e[label - 1] += static_cast<int32_t>(c);
    }
    return Monomial(std::move(e));
}

inline MarkedBasis rows_to_basis(const std::vector<TableRow>& rows, int nvars) {
    MarkedBasis mb;
    mb.vars = default_var_names(nvars);
    for (const auto& [a, b] : rows)
        mb.elems.push_back(Binomial::marked(labeled_mono(nvars, a), labeled_mono(nvars, b)));
    return mb;
}

}  // namespace detail

// The table exactly as published, marking included. E8 has the zero ideal,
// so its table is empty. There is no published table for the A family.
inline MarkedBasis catalog_table(AdeKind kind, int n) {
    if (kind == AdeKind::D) return (n % 2 == 0) ? d_even_table(n) : d_odd_table(n);
    if (kind == AdeKind::E) {
        if (n == 6) return detail::rows_to_basis(detail::e6_rows(), 14);
        if (n == 7) return detail::rows_to_basis(detail::e7_rows(), 10);
        if (n == 8) {
            MarkedBasis mb;
            mb.vars = default_var_names(8);
            return mb;
        }
        throw std::invalid_argument("catalog covers E6, E7, E8");
    }
    throw std::invalid_argument("no published table for this family");
}

struct TableFix {
    int row = 0;  // 0-based index into the published table
    Binomial printed;
    Binomial corrected;
};

// Two E6 rows do not have matching degrees on their two monomials as
// printed. Row 29 needs x13^2 in place of x13^3, and row 30 needs x12 in
// place of x11 (as printed it also repeats the lead of row 31). Every other
// table is clean.
inline std::vector<TableFix> catalog_fixes(AdeKind kind, int n) {
    std::vector<TableFix> fixes;
    if (kind == AdeKind::E && n == 6) {
        auto m = [](const std::vector<std::pair<int, int>>& f) {
            return detail::labeled_mono(14, f);
        };
        fixes.push_back({29, Binomial::marked(m({{1, 1}, {14, 1}}), m({{13, 3}})),
                         Binomial::marked(m({{1, 1}, {14, 1}}), m({{13, 2}}))});
        fixes.push_back({30, Binomial::marked(m({{1, 1}, {11, 1}}), m({{7, 1}, {8, 2}})),
                         Binomial::marked(m({{1, 1}, {12, 1}}), m({{7, 1}, {8, 2}}))});
    }
    return fixes;
}

// The published table with the corrections applied; this is the working
// basis everything downstream uses.
inline MarkedBasis catalog_basis(AdeKind kind, int n) {
    MarkedBasis mb = catalog_table(kind, n);
    for (const auto& fix : catalog_fixes(kind, n)) {
        if (fix.row < 0 || fix.row >= static_cast<int>(mb.elems.size()))
            throw std::logic_error("table fix row out of range");
        if (!(mb.elems[fix.row] == fix.printed))
            throw std::logic_error("table fix does not match the published row");
        mb.elems[fix.row] = fix.corrected;
    }
    return mb;
}

// Published cardinality of the table. D families are closed forms in
// m = floor(n/2), E values are literal counts.
inline long long catalog_size(AdeKind kind, int n) {
    if (kind == AdeKind::D) {
        long long m = n / 2;
        if (n % 2 == 0)
            return to_int64_checked(2 * binomial_coeff(m - 1, 4) + 5 * binomial_coeff(m - 1, 3) +
                                        4 * binomial_coeff(m - 1, 2) + (m - 1),
                                    "catalog size");
        return to_int64_checked(2 * binomial_coeff(m, 4) + 7 * binomial_coeff(m, 3) +
                                    9 * binomial_coeff(m, 2) + 7 * m + 1,
                                "catalog size");
    }
    if (kind == AdeKind::E) {
        if (n == 6) return 35;
        if (n == 7) return 6;
        if (n == 8) return 0;
    }
    throw std::invalid_argument("no published cardinality for this family");
}

// Published dimension of the toric variety, i.e. the rank of the point
// configuration.
inline long long catalog_dim(AdeKind kind, int n) {
    if (kind == AdeKind::D || kind == AdeKind::E) return n;
    throw std::invalid_argument("no published dimension for this family");
}

// Published codimension. For odd D this refers to the minimal configuration
// (the one without the two redundant y families); the even configuration has
// no redundant points, so there the value is codim of the full one.
inline long long catalog_codim(AdeKind kind, int n) {
    if (kind != AdeKind::D) throw std::invalid_argument("no published codimension for this family");
    long long m = n / 2;
    if (n % 2 == 0) return to_int64_checked((m - 1) + binomial_coeff(m - 1, 2), "catalog codim");
    return to_int64_checked(2 * m + 1 + binomial_coeff(m, 2), "catalog codim");
}

struct GeneratingSetClaims {
    Int structural = 1;                 // count implied by the published fiber component structure
    std::optional<Int> published;       // count stated outright, where one is stated
};

// Per the published component lists, every fiber of a D table degree splits
// into either two singleton components or three singleton components; the
// three-singleton degrees each contribute a factor of 3 (spanning trees of a
// triangle), everything else is forced. That is what `structural` encodes.
//
// For odd D the published lists are incomplete on the full ring: every fiber
// containing a monomial divisible by x_{1,n}^2 x_{i,1} or x_{1,n}^2 x_{i,n}
// also contains the corresponding x_{1,n} y term, which pairs up with it into
// a two-element component. Those 2m degrees are two-way choices, so the
// computed count comes out 2^{2m} times `structural`. The published structure
// is exact for the configuration with the redundant y points removed. For E6
// four degrees allow two choices each and the rest are forced; the published
// count of 8 does not match the 2^4 = 16 the published component structure
// implies. The verifier reports computed values next to these claims.
inline GeneratingSetClaims catalog_generating_sets(AdeKind kind, int n) {
    GeneratingSetClaims gc;
    if (kind == AdeKind::D) {
        long long m = n / 2;
        Int triangles = (n % 2 == 0)
                            ? binomial_coeff(m - 1, 3) + binomial_coeff(m - 1, 4)
                            : binomial_coeff(m, 2) + 2 * binomial_coeff(m, 3) + binomial_coeff(m, 4);
        gc.structural = detail::int_pow(3, to_int64_checked(triangles, "triangle count"));
        return gc;
    }
    if (kind == AdeKind::E) {
        if (n == 6) {
            gc.structural = 16;
            gc.published = 8;
            return gc;
        }
        if (n == 7) {
            gc.structural = 1;
            gc.published = 1;
            return gc;
        }
        if (n == 8) return gc;
    }
    throw std::invalid_argument("no published generating set data for this family");
}

// The four E6 degrees whose fibers leave a choice of generator (all in Z^6).
inline std::vector<std::vector<int64_t>> e6_swap_degrees() {
    return {{2, 2, 0, 1, 1, 0}, {1, 2, 0, 2, 1, 0}, {2, 1, 0, 1, 2, 0}, {1, 1, 0, 2, 2, 0}};
}

// Published lexicographic orders. The E orders are the ones the tables are
// claimed to be reduced bases for.
inline TermOrder e6_published_order() {
    return TermOrder(OrderKind::lex, {0, 1, 2, 3, 4, 5, 10, 11, 12, 13, 6, 7, 8, 9});
}

inline TermOrder e7_published_order() { return TermOrder(OrderKind::lex, 10); }

// The A4/A5 sources print their lex orders against an unstated numbering of
// the configuration points (it is not weight sorted: no weight-bucketed
// numbering orients either published significance sequence consistently).
// The orders below are reconstructions over this library's canonical point
// numbering, found by searching lex cones for a reduced basis matching the
// published description, then keeping the numbering whose significance
// sequence is lexicographically smallest among all bijections that orient
// that cone's basis the published way. A4 is the 54 element cone, every lead
// squarefree; its published listing names only 13 of the 14 variables, and
// the omitted one is repaired as least significant, where it cannot influence
// any comparison the 13 listed variables already decide. A5 is the 105
// element cone, every lead squarefree. Neither reconstruction is unique (the
// cones are wide), so these record one convention that reproduces the counts,
// not the source's own numbering.
inline TermOrder a4_published_order() {
    return TermOrder(OrderKind::lex, {0, 1, 2, 3, 4, 5, 7, 9, 6, 8, 10, 11, 12, 13});
}

inline TermOrder a5_published_order() {
    return TermOrder(OrderKind::lex,
                     {0, 1, 2, 3, 4, 5, 9, 8, 13, 15, 16, 7, 10, 6, 11, 12, 14, 17, 18});
}

struct VerificationReport {
    std::string family;
    int nvars = 0;
    long long expected_size = 0;
    int table_size = 0;
    bool size_ok = false;
    std::vector<int> inhomogeneous_rows;  // published rows whose sides have different degrees
    std::vector<TableFix> fixes;          // corrections that were applied
    bool fixes_match = false;             // fixes cover exactly the inhomogeneous rows
    bool marking_coherent = false;        // some term order orients every row as marked
    std::optional<bool> marking_matches_order;  // marking agrees with the published order (E only)
    bool groebner = false;                // marked reduction is confluent, so the table is a basis
    bool squarefree = false;              // the initial ideal is squarefree
    bool generates = false;               // the table generates the independently computed ideal

    bool ok() const {
        return size_ok && fixes_match && marking_coherent && groebner && squarefree && generates &&
               marking_matches_order.value_or(true);
    }
};

// Replays the published claims for one family: cardinality, homogeneity row
// by row, coherence of the marking, the Groebner property, squarefreeness of
// the initial ideal, and equality with a toric ideal computed from scratch.
inline VerificationReport verify_family(AdeKind kind, int n, const Limits& lim = {}) {
    Configuration c = closed_form_configuration(kind, n);
    MarkedBasis printed = catalog_table(kind, n);
    VerificationReport r;
    r.family = ade_name(kind, n);
    r.nvars = c.size();
    r.expected_size = catalog_size(kind, n);
    r.table_size = static_cast<int>(printed.elems.size());
    r.size_ok = r.table_size == r.expected_size;

    for (int i = 0; i < r.table_size; ++i)
        if (!a_homogeneous(c, printed.elems[i])) r.inhomogeneous_rows.push_back(i);
    r.fixes = catalog_fixes(kind, n);
    std::vector<int> fixed_rows;
    for (const auto& f : r.fixes) fixed_rows.push_back(f.row);
    std::sort(fixed_rows.begin(), fixed_rows.end());
    r.fixes_match = fixed_rows == r.inhomogeneous_rows;

    MarkedBasis table = catalog_basis(kind, n);
    for (const auto& g : table.elems)
        if (!a_homogeneous(c, g)) return r;  // a correction is wrong, nothing else is meaningful

    r.marking_coherent = certify_marked(table).has_value();
    if (!r.marking_coherent) return r;
    r.groebner = is_groebner_marked(table, lim);
    r.squarefree = all_squarefree(initial_ideal(table));

    if (kind == AdeKind::E && n != 8) {
        TermOrder o = n == 6 ? e6_published_order() : e7_published_order();
        bool match = true;
        for (const auto& g : table.elems)
            if (o.compare(g.lead(), g.trail()) != Cmp::greater) match = false;
        r.marking_matches_order = match;
    }

    // Every table element lies in the toric ideal by homogeneity; for the
    // reverse containment reduce an independently computed basis to zero.
    // For odd D the y rows substitute y out of any element, so the full
    // ideal is the minimal-configuration one plus those rows and the
    // expensive computation can run without the redundant variables.
    Configuration cc = c;
    std::vector<Binomial> extra;
    if (kind == AdeKind::D && n % 2 == 1) {
        cc = d_odd_configuration(n, false);
        for (int i = 0; i < cc.size(); ++i)
            if (cc.vars[i] != c.vars[i] || cc.points[i] != c.points[i])
                throw std::logic_error("minimal layout is not a prefix of the full one");
        DOddLayout lay(n, true);
        int N = c.size(), tn = lay.idx_t();
        for (int i : lay.J) {
            extra.push_back(Binomial::marked(
                detail::table_mono(N, {{lay.idx_y1(i), 1}}),
                detail::table_mono(N, {{tn, 1}, {lay.idx_z(i), 1}})));
            extra.push_back(Binomial::marked(
                detail::table_mono(N, {{lay.idx_yn(i), 1}}),
                detail::table_mono(N, {{tn, 1}, {lay.idx_w(i), 1}})));
        }
    }
    MarkedBasis computed = toric_ideal(cc, TermOrder(OrderKind::grevlex, cc.size()), lim);
    StepCounter sc{lim.reduction_steps};
    r.generates = true;
    auto lift = [&](const Monomial& m) {
        std::vector<int32_t> e = m.exponents();
        e.resize(c.size(), 0);
        return Monomial(std::move(e));
    };
    for (const auto& g : computed.elems) {
        Binomial lifted = Binomial::marked(lift(g.lead()), lift(g.trail()));
        if (!reduces_to_zero(lifted, table, sc)) {
            r.generates = false;
            break;
        }
    }
    for (const auto& g : extra)
        if (r.generates && !reduces_to_zero(g, table, sc)) r.generates = false;
    return r;
}

}  // namespace toricsing
