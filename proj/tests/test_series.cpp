#include "doctest.h"

#include "ssd/arith.hpp"
#include "ssd/series.hpp"

#include <stdexcept>

using namespace ssd;

TEST_CASE("truncated series arithmetic") {
    TruncatedSeries one = TruncatedSeries::one(6);
    CHECK(one[0] == 1);
    CHECK(one[6] == 0);
    CHECK(one.order() == 6);

    TruncatedSeries y = TruncatedSeries::monomial(6, 1);
    TruncatedSeries p = one - y;           // 1 - Y
    TruncatedSeries q = p * p;             // 1 - 2Y + Y^2
    CHECK(q[0] == 1);
    CHECK(q[1] == -2);
    CHECK(q[2] == 1);
    CHECK(q[3] == 0);

    // (1 - Y)^(-1) = 1 + Y + Y^2 + ...
    TruncatedSeries inv = p.inverse();
    for (int i = 0; i <= 6; ++i) CHECK(inv[i] == 1);
    TruncatedSeries prod = p * inv;
    CHECK(prod[0] == 1);
    for (int i = 1; i <= 6; ++i) CHECK(prod[i] == 0);

    CHECK_THROWS_AS(TruncatedSeries(3).inverse(), std::invalid_argument);
}

TEST_CASE("binomial power series") {
    // (1 + Y)^5
    TruncatedSeries b = TruncatedSeries::binomial_power(6, +1, 1, 5);
    for (int i = 0; i <= 5; ++i) CHECK(b[i] == Rational(binomial(5, i)));
    CHECK(b[6] == 0);

    // (1 - Y^2)^(-1) = 1 + Y^2 + Y^4 + ...
    TruncatedSeries g = TruncatedSeries::binomial_power(7, -1, 2, -1);
    for (int i = 0; i <= 7; ++i) CHECK(g[i] == (i % 2 == 0 ? 1 : 0));

    // (1+Y)^e (1+Y)^(-e) = 1
    TruncatedSeries id =
        TruncatedSeries::binomial_power(8, +1, 1, 11) *
        TruncatedSeries::binomial_power(8, +1, 1, -11);
    CHECK(id[0] == 1);
    for (int i = 1; i <= 8; ++i) CHECK(id[i] == 0);
}

TEST_CASE("alpha coefficients") {
    for (int N : {2, 6, 10, 20, 36}) CHECK(alpha(0, N) == 1);
    CHECK(alpha(1, 6) == 2);
    CHECK(alpha(2, 12) == 6);
    CHECK(alpha(6, 36) == 546);

    // closed form at the module boundary: alpha(2mu, 12mu) = 6 binom(5mu-1, mu-1)
    for (long mu = 1; mu <= 6; ++mu)
        CHECK(alpha(static_cast<int>(2 * mu), static_cast<int>(12 * mu)) ==
              6 * binomial(5 * mu - 1, mu - 1));
}

TEST_CASE("alpha agrees with the reversion route") {
    CHECK(alpha_by_buermann_check(0, 8));
    CHECK(alpha_by_buermann_check(2, 12));
    CHECK(alpha_by_buermann_check(3, 20));
    for (int N = 2; N <= 24; ++N)
        for (int i = 0; i <= (N - 2) / 4; ++i) CHECK(alpha_by_buermann_check(i, N));
}

TEST_CASE("gamma coefficients") {
    CHECK(gamma(1, 0, 6) == 1);
    CHECK(gamma(2, 0, 14) == 6);
    for (int N : {6, 14, 22}) {
        int M = (N - 2) / 4;
        for (int h = 0; h <= M; ++h) CHECK(gamma(h, h, N) == 1);
    }
    CHECK_THROWS_AS(gamma(0, 1, 10), std::invalid_argument);   // k > h
    CHECK_THROWS_AS(gamma(5, 0, 10), std::invalid_argument);   // h > M
    CHECK_THROWS_AS(gamma(1, -1, 10), std::invalid_argument);
}

TEST_CASE("gamma agrees with its series oracle") {
    for (int N = 2; N <= 26; ++N) {
        int M = (N - 2) / 4;
        for (int h = 0; h <= M; ++h)
            for (int k = 0; k <= h; ++k)
                CHECK(gamma(h, k, N) == gamma_series_oracle(h, k, N));
    }
}

TEST_CASE("binomial parity by carries") {
    CHECK(binom_parity(1));        // binom(4, 0) = 1
    CHECK(binom_parity(2));        // binom(9, 1) = 9
    CHECK_FALSE(binom_parity(5));  // binom(24, 4) = 10626
    CHECK(binom_parity(3));        // binom(14, 2) = 91
    CHECK(binom_parity(4));        // binom(19, 3) = 969

    // cross-check against the exact binomial for a range
    for (long mu = 1; mu <= 40; ++mu) {
        bool direct = (binomial(5 * mu - 1, mu - 1) % 2) == 1;
        CHECK(binom_parity(mu) == direct);
    }
}

TEST_CASE("exact binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(general_binomial(-1, 3) == -1);
    CHECK(general_binomial(-2, 2) == 3);
    CHECK(general_binomial(5, 2) == 10);
    CHECK(pow2(10) == 1024);
    CHECK(is_integer(Rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(3, 2)));
    CHECK(is_nonnegative_integer(Rational(0)));
    CHECK_FALSE(is_nonnegative_integer(Rational(-2)));
}
