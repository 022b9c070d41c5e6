#include "doctest.h"

#include "ssd/qr.hpp"
#include "ssd/weight_enumerator.hpp"

#include "oracle.hpp"

#include <random>
#include <stdexcept>

using namespace ssd;

namespace {

LinearCode code_of(std::initializer_list<std::string_view> rows) {
    return LinearCode::from_generators(BitMatrix::from_strings(rows));
}

WeightEnumerator poly(int n, std::initializer_list<std::pair<int, Rational>> terms) {
    WeightEnumerator w(n);
    for (const auto& [k, v] : terms) w.set_coeff(k, v);
    return w;
}

}  // namespace

TEST_CASE("weight enumerators of pinned codes") {
    CHECK(enumerate_weights(code_of({"1111"})) == poly(4, {{0, 1}, {4, 1}}));
    CHECK(enumerate_weights(code_of({"111111", "110000"})) ==
          poly(6, {{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
    CHECK(enumerate_weights(LinearCode(5)) == poly(5, {{0, 1}}));

    WeightEnumerator golay = enumerate_weights(extended_qr_code(23));
    CHECK(golay ==
          poly(24, {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}}));
    CHECK(golay.sum() == 4096);
    CHECK(golay.top_weight() == 24);
    CHECK(golay.min_positive_weight() == 8);
    CHECK(golay.all_nonnegative());
    CHECK(golay.all_integer());
}

TEST_CASE("enumerator formatting") {
    WeightEnumerator w = enumerate_weights(code_of({"111111", "110000"}));
    CHECK(w.to_string() == "x^6 + x^4 y^2 + x^2 y^4 + y^6");
    CHECK(w.to_string_at_one() == "1 + y^2 + y^4 + y^6");
}

TEST_CASE("enumeration respects the cap") {
    LinearCode golay = extended_qr_code(23);
    CHECK_THROWS_AS(enumerate_weights(golay, EnumOptions{8, 1}), enumeration_cap_error);
    CHECK(enumerate_weights(golay, EnumOptions{12, 3}).coeff(8) == 759);
}

TEST_CASE("MacWilliams transform on pinned polynomials") {
    CHECK(macwilliams(poly(2, {{0, 1}, {2, 1}}), 1) == poly(2, {{0, 1}, {2, 1}}));
    CHECK(macwilliams(poly(4, {{0, 1}, {4, 1}}), 1) ==
          poly(4, {{0, 1}, {2, 6}, {4, 1}}));

    WeightEnumerator w6 = enumerate_weights(code_of({"111111", "110000"}));
    WeightEnumerator d6 = macwilliams(w6, 2);
    CHECK(d6 == poly(6, {{0, 1}, {2, 7}, {4, 7}, {6, 1}}));
    CHECK(d6 == enumerate_weights(code_of({"111111", "110000"}).dual()));
}

TEST_CASE("MacWilliams matches the dual and is an involution on random codes") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 14);
        LinearCode c = LinearCode::from_generators(
            oracle::random_matrix(rng, 1 + static_cast<int>(rng() % 8), n));
        WeightEnumerator w = enumerate_weights(c);
        CHECK(w.sum() == Rational(pow2(c.dim())));
        CHECK(macwilliams(w, c.dim()) == enumerate_weights(c.dual()));
        CHECK(macwilliams(macwilliams(w, c.dim()), n - c.dim()) == w);
    }
}

TEST_CASE("coset weight enumerators") {
    LinearCode base = code_of({"1100", "0011"});
    BitVector rep = BitVector::from_string("1000");
    WeightEnumerator w = enumerate_coset_weights(rep, base);
    // coset words: 1000, 0100, 1011, 0111
    CHECK(w == poly(4, {{1, 2}, {3, 2}}));
    CHECK(w.sum() == 4);

    // coset of the code itself reduces to the plain enumerator
    CHECK(enumerate_coset_weights(BitVector::from_string("1100"), base) ==
          enumerate_weights(base));
}

TEST_CASE("coset enumerator agrees with brute force") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        LinearCode base = LinearCode::from_generators(
            oracle::random_matrix(rng, 1 + static_cast<int>(rng() % 6), n));
        BitVector rep = oracle::random_vector(rng, n);
        WeightEnumerator w = enumerate_coset_weights(rep, base);
        WeightEnumerator naive(n);
        for (const auto& word : oracle::all_words(base))
            naive.add_coeff((word ^ rep).weight(), 1);
        CHECK(w == naive);
    }
}

TEST_CASE("enumerator arithmetic") {
    WeightEnumerator a = poly(4, {{0, 1}, {2, 3}});
    WeightEnumerator b = poly(4, {{2, Rational(1, 2)}, {4, 5}});
    WeightEnumerator s = a + b;
    CHECK(s.coeff(2) == Rational(7, 2));
    CHECK_FALSE(s.all_integer());
    CHECK((s - b) == a);
    WeightEnumerator scaled = a;
    scaled *= Rational(1, 3);
    CHECK(scaled.coeff(2) == 1);
    CHECK(poly(3, {}).is_zero());
    CHECK(poly(3, {}).top_weight() == -1);
    CHECK(poly(3, {}).min_positive_weight() == -1);
    CHECK_FALSE(poly(4, {{1, -2}}).all_nonnegative());
}
