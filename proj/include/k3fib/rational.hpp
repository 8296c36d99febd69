#pragma once

/// Exact integer and rational scalar types used throughout the library.
///
/// All arithmetic in k3fib is exact; no floating point anywhere. We use
/// boost::multiprecision's header-only cpp_int / cpp_rational, which keep
/// rationals in lowest terms with positive denominator automatically.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace k3fib {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int pow_int(const Int& base, unsigned e) {
    Int r(1), b(base);
    unsigned k = e;
    while (k) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

/// cpp_rational's (num, den) constructor rejects negative denominators in
/// the Boost version shipped here; this helper normalizes the sign.
inline Rat make_rat(Int n, Int d) {
    if (d == 0) throw std::domain_error("make_rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

inline Rat inv_rat(const Rat& r) {
    if (r == 0) throw std::domain_error("inv_rat: division by zero");
    return make_rat(den(r), num(r));
}

inline Rat pow_rat(const Rat& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rat: zero to negative power");
        return pow_rat(inv_rat(base), -e);
    }
    Rat r(1), b(base);
    int k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

/// "p/q" with the "/q" suppressed for integers; used in reports and JSON.
inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}

/// Deterministic rational sampler for the randomized identity checks.
/// The seed is always recorded in the report that consumed the samples.
class RatSampler {
public:
    explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform numerator in [-bound, bound], denominator in [1, bound].
    Rat next(int bound = 20) {
        std::uniform_int_distribution<int> n(-bound, bound);
        std::uniform_int_distribution<int> d(1, bound);
        return Rat(n(rng_), d(rng_));
    }

    /// As next(), but never zero.
    Rat next_nonzero(int bound = 20) {
        for (;;) {
            Rat r = next(bound);
            if (r != 0) return r;
        }
    }

    std::uint64_t next_u64() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

}  // namespace k3fib
