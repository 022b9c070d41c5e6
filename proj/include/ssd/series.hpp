#pragma once

#include "ssd/arith.hpp"

#include <vector>

namespace ssd {

// Formal power series over the rationals, truncated after Y^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1) {}
    static TruncatedSeries one(int order);
    static TruncatedSeries monomial(int order, int power, const Rational& v = 1);
    // (1 + sign * Y^step)^e for any integer e, sign in {+1, -1}
    static TruncatedSeries binomial_power(int order, int sign, int step, long e);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_.at(i); }
    Rational& operator[](int i) { return c_.at(i); }

    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries inverse() const;   // constant term must be nonzero

private:
    std::vector<Rational> c_;
};

// [Y^i] (1-Y^2)^(-2i-1) (1+Y)^(2+6i-N): the coefficient forced at index i of
// a Gleason-type decomposition when the low-order terms of B are pinned.
// Defined for every i >= 0.
BigInt alpha(int i, int N);

// Re-derives alpha(i, N) by triangularly expanding
// f = (1-6Y+Y^2)^(-1) (1+Y)^(2-N) in powers of g = Y (1-Y)^2 (1+Y)^(-4)
// and returns whether the two routes agree.
bool alpha_by_buermann_check(int i, int N);

// binom(2 floor((N-2)/4) - h - k, h - k), the change-of-basis coefficients
// between Z^k f(Z) and powers of g(Z) = Z (1-Z)^(-2). Requires 0 <= k <= h
// <= floor((N-2)/4).
BigInt gamma(int h, int k, int N);

// the same coefficient from the series expansion itself
BigInt gamma_series_oracle(int h, int k, int N);

// Whether binom(5mu-1, mu-1) is odd, decided by the carry criterion (no
// carries adding 4mu to mu-1 in base 2) and cross-checked against the exact
// binomial.
bool binom_parity(long mu);

}  // namespace ssd
