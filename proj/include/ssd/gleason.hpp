#pragma once

#include "ssd/weight_enumerator.hpp"

#include <vector>

namespace ssd {

// Coordinates of an even enumerator B of degree 2N in the module basis
// (x^4 - 6x^2y^2 + y^4) (x^2+y^2)^(N-2-4i) (x^2y^2(x^2-y^2)^2)^i,
// i = 0 .. floor((N-2)/4), together with the rescaled values
// eps[i] = (-1)^i 2^(N-1-6i) e[i].
struct GleasonDecomposition {
    int N = 0;
    std::vector<Rational> e;
    std::vector<Rational> eps;
    int forced_prefix = 0;   // leading entries pinned by a distance assumption

    bool eps_nonnegative_integers() const;
};

// B = W_D - (1/2) W_dual(D) for a semi self-dual D: the half-difference that
// is anti-invariant under the MacWilliams substitution.
WeightEnumerator build_B(const LinearCode& d, EnumOptions opts = {});

// Exact triangular solve of B against the module basis; throws when the
// residual is nonzero (input outside the invariant module).
GleasonDecomposition gleason_decompose(const WeightEnumerator& b);

// F(1,y) = sum_i eps[i] y^(N-2-4i) (1-y^4)^(2i) (1+y^4), returned as a
// weight-indexed polynomial of degree 2N.
WeightEnumerator F_from_decomposition(const GleasonDecomposition& dec);

// Combinatorial counterpart: enumerator of the shadow words whose weight is
// congruent to N-2 mod 4.
WeightEnumerator shadow_F(const LinearCode& d, EnumOptions opts = {});

struct IdentityCheck {
    bool f_matches = false;
    bool eps_ok = false;
    GleasonDecomposition dec;
    bool ok() const { return f_matches && eps_ok; }
};

// Runs the full identity suite on a semi self-dual non-doubly-even code:
// shadow_F(D) must equal F_from_decomposition(gleason_decompose(build_B(D)))
// and every eps[i] must be a non-negative integer.
IdentityCheck check_enumerator_identities(const LinearCode& d, EnumOptions opts = {});

}  // namespace ssd
