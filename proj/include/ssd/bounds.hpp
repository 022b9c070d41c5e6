#pragma once

#include "ssd/gleason.hpp"
#include "ssd/linear_code.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssd {

// Certificate that assuming a larger dual distance forces an inadmissible
// coefficient: a negative epsilon, a non-integral epsilon, or a nonzero
// series coefficient past the end of the module basis.
struct BoundCertificate {
    enum class Kind { negative, non_integral, beyond_module };
    Kind kind = Kind::negative;
    int index = -1;          // offending i
    BigInt alpha_value;      // alpha(i, N)
    Rational eps_value;      // (-1)^i 2^(N-2-6i) alpha(i, N); meaningful when i is in range
    std::string describe() const;
};

struct BoundReport {
    int n = 0;
    bool doubly_even = false;
    int bound = 0;
    std::string rule;        // congruence row or special branch that applied
    std::optional<BoundCertificate> certificate;
};

// Table bound on the dual distance of a semi self-dual code: 4 floor(n/24)
// plus 2, 4 or 6 by the class of n mod 24; drops to 4 mu at n = 24 mu when
// the code is doubly-even or binom(5mu-1, mu-1) is odd.
BoundReport theorem_bound(int n, bool doubly_even);

// dual-distance bound for doubly-even codes containing the all-ones word:
// largest even integer <= floor((8 + n)/6)
int doubly_even_bound(int n);

// dual-distance bound for doubly-even codes without the all-ones assumption
int rains_bound(int n);

// distance bound for self-dual codes: 4 floor(n/24) + 4, +6 when n = 22 mod 24
int selfdual_bound(int n);

// Re-derives theorem_bound(n, false) for n = 0..14 (mod 24): assumes dual
// distance >= bound + 2, pins e_i = alpha(i, N)/2 below the implied half
// distance, and returns the first index whose forced epsilon is negative,
// non-integral, or out of basis range. Envelope classes 16..22 (mod 24) come
// back without a certificate.
BoundReport prove_bound(int n);

// recompute the certificate's alpha and epsilon from scratch
bool verify_certificate(const BoundReport& report);

struct ShadowInequality {
    int n = 0;
    int code_distance = 0;
    int shadow_distance = 0;
    bool holds = false;   // 2 d(F) + d(S(F)) <= 4 + n/2
};

// Balance between the distance of a non-doubly-even self-dual code and the
// distance of its shadow.
ShadowInequality shadow_inequality_check(const LinearCode& f, EnumOptions opts = {});

struct CoverageReport {
    int limit = 0;
    int covered = 0;
    double fraction = 0.0;
    std::string fraction_display;   // exact count over limit, two decimals
};

// Counts m <= limit with m odd, or m = 2 mu and binom(5mu-1, mu-1) odd: the
// multiples of 24 whose length-24m case is settled.
CoverageReport coverage_report(int limit = 153);

struct FeasibilitySolution {
    std::vector<BigInt> eps_free;     // values at indices d .. floor((N-2)/4)
    WeightEnumerator f_poly;          // resulting F(1,y), exact
    bool f_nonnegative = false;       // F(1,y) has non-negative integer coefficients
    bool wd_nonnegative = false;      // so does the reconstructed W_D(1,y)
    bool wdual_nonnegative = false;   // and the reconstructed dual enumerator
};

struct FeasibilityReport {
    int n = 0;
    int d = 0;                        // assumed half dual distance
    int free_lo = 0, free_hi = 0;     // inclusive index range of free epsilons
    bool forced_ok = false;
    std::optional<BoundCertificate> forced_violation;
    bool b_prefix_ok = false;         // B(1,y) = 1/2 + O(y^(2d)) for the forced part
    std::uint64_t tuples_scanned = 0;
    std::uint64_t solutions_found = 0;
    bool truncated = false;
    std::vector<FeasibilitySolution> solutions;
};

struct FeasibilityOptions {
    long range_cap = 64;
    std::uint64_t max_solutions = 1000;
};

// Grid search over the free epsilon values (each 0 .. range_cap) after the
// distance assumption pins the prefix; keeps tuples whose F(1,y) has only
// non-negative coefficients. Requires n = 24 mu with binom(5mu-1, mu-1) even
// (odd parity is already refuted by prove_bound) and d >= 2 mu + 1.
FeasibilityReport feasibility_search(int n, int d, FeasibilityOptions opts = {});

}  // namespace ssd
