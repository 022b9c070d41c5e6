#include "ssd/series.hpp"

#include <stdexcept>

namespace ssd {

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int power, const Rational& v) {
    TruncatedSeries s(order);
    if (power <= order) s.c_[power] = v;
    return s;
}

TruncatedSeries TruncatedSeries::binomial_power(int order, int sign, int step, long e) {
    if (step < 1) throw std::invalid_argument("binomial_power: step must be positive");
    TruncatedSeries s(order);
    for (int j = 0; step * j <= order; ++j) {
        BigInt b = general_binomial(e, j);
        if (sign < 0 && j % 2) b = -b;
        s.c_[step * j] = Rational(b);
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int ord = order();
    TruncatedSeries out(ord);
    for (int i = 0; i <= ord; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= ord && j <= o.order(); ++j) {
            if (o.c_[j] == 0) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int ord = order();
    TruncatedSeries out(ord);
    for (int i = 0; i <= ord; ++i)
        out.c_[i] = c_[i] - (i <= o.order() ? o.c_[i] : Rational(0));
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0] == 0) throw std::invalid_argument("inverse: constant term is zero");
    int ord = order();
    TruncatedSeries out(ord);
    out.c_[0] = Rational(1) / c_[0];
    for (int k = 1; k <= ord; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
        out.c_[k] = -acc / c_[0];
    }
    return out;
}

BigInt alpha(int i, int N) {
    if (i < 0 || N < 2) throw std::invalid_argument("alpha: need i >= 0 and N >= 2");
    TruncatedSeries a = TruncatedSeries::binomial_power(i, -1, 2, -(2L * i + 1));
    TruncatedSeries b = TruncatedSeries::binomial_power(i, +1, 1, 2L + 6L * i - N);
    Rational r = (a * b)[i];
    if (!is_integer(r)) throw std::logic_error("alpha: non-integer coefficient");
    return numerator(r);
}

namespace {

// expand target in powers of g (valuation 1, unit leading coefficient) and
// return the coefficient of g^h
Rational expand_in_powers(TruncatedSeries target, const TruncatedSeries& g, int h) {
    TruncatedSeries gp = TruncatedSeries::one(target.order());
    Rational result = 0;
    for (int t = 0; t <= h; ++t) {
        Rational at = target[t] / gp[t];
        if (t == h) { result = at; break; }
        for (int j = t; j <= target.order(); ++j) target[j] -= at * gp[j];
        gp = gp * g;
        // gp now has valuation t+1; target[t] is exactly zero
    }
    return result;
}

}  // namespace

bool alpha_by_buermann_check(int i, int N) {
    int ord = i;
    TruncatedSeries quad(ord);
    quad[0] = 1;
    if (ord >= 1) quad[1] = -6;
    if (ord >= 2) quad[2] = 1;
    TruncatedSeries f = quad.inverse() *
                        TruncatedSeries::binomial_power(ord, +1, 1, 2L - N);
    TruncatedSeries g = TruncatedSeries::monomial(ord, 1) *
                        TruncatedSeries::binomial_power(ord, -1, 1, 2) *
                        TruncatedSeries::binomial_power(ord, +1, 1, -4);
    Rational derived = expand_in_powers(f, g, i);
    return is_integer(derived) && numerator(derived) == alpha(i, N);
}

BigInt gamma(int h, int k, int N) {
    if (N < 2) throw std::invalid_argument("gamma: need N >= 2");
    int M = (N - 2) / 4;
    if (!(0 <= k && k <= h && h <= M))
        throw std::invalid_argument("gamma: need 0 <= k <= h <= floor((N-2)/4)");
    return binomial(2L * M - h - k, h - k);
}

BigInt gamma_series_oracle(int h, int k, int N) {
    if (N < 2) throw std::invalid_argument("gamma_series_oracle: need N >= 2");
    int M = (N - 2) / 4;
    if (!(0 <= k && k <= h && h <= M))
        throw std::invalid_argument("gamma_series_oracle: need 0 <= k <= h <= floor((N-2)/4)");
    int ord = h;
    TruncatedSeries f = TruncatedSeries::binomial_power(ord, +1, 1, -1) *
                        TruncatedSeries::binomial_power(ord, -1, 1, -2L * M);
    TruncatedSeries target = TruncatedSeries::monomial(ord, k) * f;
    TruncatedSeries g = TruncatedSeries::monomial(ord, 1) *
                        TruncatedSeries::binomial_power(ord, -1, 1, -2);
    Rational r = expand_in_powers(target, g, h);
    if (!is_integer(r)) throw std::logic_error("gamma_series_oracle: non-integer coefficient");
    return numerator(r);
}

bool binom_parity(long mu) {
    if (mu < 1) throw std::invalid_argument("binom_parity: mu must be positive");
    // no carries adding 4mu to mu-1 in base 2
    bool carry_free = (static_cast<unsigned long>(mu - 1) &
                       (4UL * static_cast<unsigned long>(mu))) == 0;
    bool exact_odd = bit_test(binomial(5 * mu - 1, mu - 1), 0);
    if (carry_free != exact_odd)
        throw std::logic_error("binom_parity: carry criterion disagrees with the exact binomial");
    return exact_odd;
}

}  // namespace ssd
