#ifndef TORICSING_BINOMIAL_HPP
#define TORICSING_BINOMIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricsing/monomial.hpp"
#include "toricsing/order.hpp"

namespace toricsing {

// Pure difference of two distinct monomials, x^lead - x^trail. When marked,
// the lead is a chosen initial term; otherwise the pair is kept in the
// canonical orientation (larger side first under grevlex with the identity
// permutation, which can never tie for distinct monomials).
class Binomial {
public:
    Binomial(Monomial lead, Monomial trail, bool marked)
        : lead_(std::move(lead)), trail_(std::move(trail)), marked_(marked) {
        if (lead_.nvars() != trail_.nvars())
            throw std::invalid_argument("binomial dimension mismatch");
        if (lead_ == trail_) throw std::invalid_argument("binomial sides must differ");
        if (!marked_) canonicalize();
    }

    static Binomial marked(Monomial lead, Monomial trail) {
        return Binomial(std::move(lead), std::move(trail), true);
    }

    static Binomial unmarked(Monomial a, Monomial b) {
        return Binomial(std::move(a), std::move(b), false);
    }

    // Marked binomial whose lead is the larger side under `o`.
    static Binomial oriented(Monomial a, Monomial b, const TermOrder& o) {
        return o.greater(a, b) ? Binomial(std::move(a), std::move(b), true)
                               : Binomial(std::move(b), std::move(a), true);
    }

    const Monomial& lead() const { return lead_; }
    const Monomial& trail() const { return trail_; }
    bool is_marked() const { return marked_; }
    int nvars() const { return lead_.nvars(); }

    Binomial flipped() const { return Binomial(trail_, lead_, marked_); }

    // Exponent difference lead - trail; the constraint vector a weight must be
    // nonnegative on for the marking to be coherent.
    std::vector<int64_t> direction() const {
        std::vector<int64_t> u(lead_.nvars());
        for (int i = 0; i < lead_.nvars(); ++i) u[i] = lead_[i] - trail_[i];
        return u;
    }

    bool operator==(const Binomial& b) const {
        return marked_ == b.marked_ && lead_ == b.lead_ && trail_ == b.trail_;
    }

    std::string str(const std::vector<std::string>& names) const {
        return lead_.str(names) + " - " + trail_.str(names);
    }

private:
    void canonicalize() {
        TermOrder o(OrderKind::grevlex, lead_.nvars());
        if (o.less(lead_, trail_)) std::swap(lead_, trail_);
    }

    Monomial lead_, trail_;
    bool marked_;
};

// A list of marked binomials over a named ring. `reduced` is set by the
// completion routine when the list is the unique reduced Groebner basis for
// the order it was computed with.
struct MarkedBasis {
    std::vector<std::string> vars;
    std::vector<Binomial> elems;
    bool reduced = false;

    int nvars() const { return static_cast<int>(vars.size()); }
};

inline std::vector<std::string> default_var_names(int n, const std::string& stem = "x") {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

} // namespace toricsing

#endif
