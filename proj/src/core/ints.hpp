#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ascert {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Int& v) {
    if (!fits_int64(v))
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

// Deterministic trial division; scheme orders here are small.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

// Squarefree d with n = d * f^2, sign preserved. n must be nonzero.
inline Int squarefree_part(Int n) {
    if (n == 0) throw std::invalid_argument("squarefree_part of zero");
    const bool neg = n < 0;
    Int m = abs(n);
    Int result = 1;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        int mult = 0;
        while (m % d == 0) {
            m /= d;
            ++mult;
        }
        if (mult % 2 == 1) result *= d;
    }
    result *= m;  // leftover prime
    return neg ? -result : result;
}

// Floor square root, and exact-square test.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

}  // namespace ascert
