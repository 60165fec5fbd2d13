#ifndef TORICSING_MONOMIAL_HPP
#define TORICSING_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricsing {

// Monomial in a fixed polynomial ring, stored as its exponent vector.
// Exponents are nonnegative; total degree is cached.
class Monomial {
public:
    explicit Monomial(std::vector<int32_t> e) : e_(std::move(e)), deg_(0) {
        for (int32_t x : e_) {
            if (x < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
            deg_ += x;
        }
    }

    static Monomial one(int nvars) { return Monomial(std::vector<int32_t>(nvars, 0)); }

    static Monomial var(int nvars, int i, int32_t power = 1) {
        std::vector<int32_t> e(nvars, 0);
        e.at(i) = power;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int32_t operator[](int i) const { return e_[i]; }
    int64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    const std::vector<int32_t>& exponents() const { return e_; }

    Monomial mul(const Monomial& m) const {
        check_dim(m);
        std::vector<int32_t> r(e_.size());
        for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + m.e_[i];
        return Monomial(std::move(r));
    }

    // Does this divide m?
    bool divides(const Monomial& m) const {
        check_dim(m);
        if (deg_ > m.deg_) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    // this / m, requires m | this.
    Monomial div(const Monomial& m) const {
        check_dim(m);
        std::vector<int32_t> r(e_.size());
        for (size_t i = 0; i < e_.size(); ++i) {
            r[i] = e_[i] - m.e_[i];
            if (r[i] < 0) throw std::invalid_argument("monomial division is not exact");
        }
        return Monomial(std::move(r));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_dim(b);
        std::vector<int32_t> r(a.e_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
        return Monomial(std::move(r));
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_dim(b);
        std::vector<int32_t> r(a.e_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = std::min(a.e_[i], b.e_[i]);
        return Monomial(std::move(r));
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        a.check_dim(b);
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    bool squarefree() const {
        return std::all_of(e_.begin(), e_.end(), [](int32_t x) { return x <= 1; });
    }

    bool operator==(const Monomial& m) const { return e_ == m.e_; }
    bool operator!=(const Monomial& m) const { return e_ != m.e_; }

    // Plain lexicographic comparison on exponent vectors; used for canonical
    // sorting of outputs, not as a term order.
    static bool lex_less(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    std::string str(const std::vector<std::string>& names) const {
        if (names.size() != e_.size()) throw std::invalid_argument("variable name list has wrong length");
        std::string s;
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    void check_dim(const Monomial& m) const {
        if (e_.size() != m.e_.size()) throw std::invalid_argument("monomial dimension mismatch");
    }

    std::vector<int32_t> e_;
    int64_t deg_;
};

} // namespace toricsing

#endif
