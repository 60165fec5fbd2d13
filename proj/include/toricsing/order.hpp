#ifndef TORICSING_ORDER_HPP
#define TORICSING_ORDER_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricsing/monomial.hpp"

namespace toricsing {

enum class OrderKind { lex, grlex, grevlex, weight };

enum class Cmp { less = -1, equal = 0, greater = 1 };

// Term order on monomials. Optional integer weight rows are compared first
// (most significant row first), then the base comparison on the permuted
// variables breaks ties. Every constructible TermOrder is a genuine monomial
// order: totality comes from the final lex/revlex sweep, multiplicativity from
// linearity, and 1-minimality is enforced by requiring the first weight row to
// be strictly positive whenever weight rows are present.
class TermOrder {
public:
    TermOrder(OrderKind kind, int nvars) : TermOrder(kind, identity(nvars)) {}

    TermOrder(OrderKind kind, std::vector<int> perm) : kind_(kind), perm_(std::move(perm)) {
        if (kind_ == OrderKind::weight)
            throw std::invalid_argument("weight order requires a weight vector");
        validate_perm();
    }

    // kind = weight: compare by w, ties by lex on perm.
    static TermOrder weighted(std::vector<int64_t> w, std::vector<int> perm) {
        TermOrder o;
        o.kind_ = OrderKind::weight;
        o.perm_ = std::move(perm);
        o.rows_.push_back(std::move(w));
        o.validate_perm();
        o.validate_rows(true);
        return o;
    }

    // Matrix order: weight rows in order of significance, ties broken by the
    // base kind on perm. The first row must be strictly positive.
    static TermOrder matrix(std::vector<std::vector<int64_t>> rows, std::vector<int> perm,
                            OrderKind tie_kind = OrderKind::lex) {
        if (rows.empty()) throw std::invalid_argument("matrix order requires at least one row");
        if (tie_kind == OrderKind::weight) throw std::invalid_argument("tie kind must not be weight");
        TermOrder o;
        o.kind_ = tie_kind;
        o.perm_ = std::move(perm);
        o.rows_ = std::move(rows);
        o.validate_perm();
        o.validate_rows(true);
        return o;
    }

    OrderKind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<std::vector<int64_t>>& weight_rows() const { return rows_; }

    Cmp compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != nvars() || b.nvars() != nvars())
            throw std::invalid_argument("term order dimension mismatch");
        for (const auto& w : rows_) {
            __int128 s = 0;
            for (int i = 0; i < nvars(); ++i)
                s += static_cast<__int128>(w[i]) * (a[i] - b[i]);
            if (s != 0) return s > 0 ? Cmp::greater : Cmp::less;
        }
        switch (kind_) {
            case OrderKind::grlex:
            case OrderKind::grevlex:
                if (a.degree() != b.degree())
                    return a.degree() > b.degree() ? Cmp::greater : Cmp::less;
                break;
            default:
                break;
        }
        if (kind_ == OrderKind::grevlex) {
            // Graded reverse lex: among equal degrees the monomial with the
            // smaller exponent on the least significant differing variable wins.
            for (int i = nvars() - 1; i >= 0; --i) {
                int v = perm_[i];
                if (a[v] != b[v]) return a[v] < b[v] ? Cmp::greater : Cmp::less;
            }
            return Cmp::equal;
        }
        for (int i = 0; i < nvars(); ++i) {
            int v = perm_[i];
            if (a[v] != b[v]) return a[v] > b[v] ? Cmp::greater : Cmp::less;
        }
        return Cmp::equal;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::greater; }

private:
    TermOrder() = default;

    static std::vector<int> identity(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    void validate_perm() const {
        std::vector<char> seen(perm_.size(), 0);
        for (int v : perm_) {
            if (v < 0 || v >= static_cast<int>(perm_.size()) || seen[v])
                throw std::invalid_argument("invalid variable permutation");
            seen[v] = 1;
        }
    }

    void validate_rows(bool first_positive) const {
        // Keeps |w . (a-b)| < 2^126 for any realistic exponents.
        constexpr int64_t kMaxWeight = int64_t(1) << 50;
        for (const auto& w : rows_) {
            if (w.size() != perm_.size()) throw std::invalid_argument("weight row has wrong length");
            for (int64_t x : w)
                if (x > kMaxWeight || x < -kMaxWeight)
                    throw std::invalid_argument("weight entry too large");
        }
        if (first_positive)
            for (int64_t x : rows_.front())
                if (x <= 0) throw std::invalid_argument("leading weight row must be strictly positive");
    }

    OrderKind kind_ = OrderKind::grevlex;
    std::vector<int> perm_;
    std::vector<std::vector<int64_t>> rows_;
};

} // namespace toricsing

#endif
