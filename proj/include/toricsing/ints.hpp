#ifndef TORICSING_INTS_HPP
#define TORICSING_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricsing {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A long-running computation exceeded its step budget.
struct resource_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A marked basis whose markings admit no positive weight vector was fed to a
// routine that needs coherent markings to terminate.
struct marked_incoherent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-call step budgets. `reduction_steps` counts individual rewrite steps
// inside normal-form computations; the other caps guard enumerations.
struct Limits {
    long long reduction_steps = 10'000'000;
    long long fiber_cap = 1'000'000;
    int max_cones = 2'000;
};

// Mutable step counter threaded through one top-level call.
struct StepCounter {
    long long left;
    explicit StepCounter(long long budget) : left(budget) {}
    void charge(const char* what) {
        if (--left < 0) throw resource_exceeded(std::string("step budget exceeded in ") + what);
    }
};

inline Int binomial_coeff(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline int64_t to_int64_checked(const Int& v, const char* ctx = "value") {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        throw std::overflow_error(std::string(ctx) + ": value does not fit in 64 bits");
    return static_cast<int64_t>(v);
}

} // namespace toricsing

#endif
