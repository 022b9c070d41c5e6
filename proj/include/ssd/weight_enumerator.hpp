#pragma once

#include "ssd/arith.hpp"
#include "ssd/linear_code.hpp"

#include <string>
#include <vector>

namespace ssd {

// Homogeneous bivariate polynomial of degree n with exact rational
// coefficients, indexed by weight: coeff(w) multiplies x^(n-w) y^w.
class WeightEnumerator {
public:
    WeightEnumerator() = default;
    explicit WeightEnumerator(int n) : n_(n), c_(n + 1) {}

    int degree() const { return n_; }
    const Rational& coeff(int w) const { return c_.at(w); }
    void set_coeff(int w, Rational v) { c_.at(w) = std::move(v); }
    void add_coeff(int w, const Rational& v) { c_.at(w) += v; }

    WeightEnumerator& operator+=(const WeightEnumerator& o);
    WeightEnumerator& operator-=(const WeightEnumerator& o);
    WeightEnumerator& operator*=(const Rational& s);
    friend WeightEnumerator operator+(WeightEnumerator a, const WeightEnumerator& b) { return a += b; }
    friend WeightEnumerator operator-(WeightEnumerator a, const WeightEnumerator& b) { return a -= b; }
    bool operator==(const WeightEnumerator&) const = default;

    bool is_zero() const;
    Rational sum() const;   // W(1,1)
    // largest w <= degree with coeff(w) != 0, or -1 for the zero polynomial
    int top_weight() const;
    // smallest positive w with coeff(w) != 0, or -1 if none
    int min_positive_weight() const;
    bool all_nonnegative() const;
    bool all_integer() const;

    std::string to_string() const;            // "x^6 + x^4 y^2 + ..."
    std::string to_string_at_one() const;     // "1 + 7 y^2 + ..." (x = 1)

private:
    int n_ = 0;
    std::vector<Rational> c_;
};

WeightEnumerator enumerate_weights(const LinearCode& c, EnumOptions opts = {});
WeightEnumerator enumerate_coset_weights(const BitVector& rep, const LinearCode& base,
                                         EnumOptions opts = {});

// MacWilliams transform 2^(-dim) W(x+y, x-y); with dim = dim C and W = W_C
// this is the weight enumerator of the dual code.
WeightEnumerator macwilliams(const WeightEnumerator& w, int dim);

}  // namespace ssd
