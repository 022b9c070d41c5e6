#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace ssd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binomial coefficient C(n, k); zero for k < 0 or k > n
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

// C(e, j) for integer e of either sign, the coefficient of u^j in (1+u)^e
inline BigInt general_binomial(long e, long j) {
    if (j < 0) return 0;
    if (e >= 0) return binomial(e, j);
    BigInt b = binomial(-e + j - 1, j);
    return (j % 2 == 0) ? b : -b;
}

// 2^e as an exact rational, e may be negative
inline Rational pow2(long e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e >= 0 ? Rational(p) : Rational(1, p);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonnegative_integer(const Rational& r) {
    return is_integer(r) && r >= 0;
}

}  // namespace ssd
