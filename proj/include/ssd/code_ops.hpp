#pragma once

#include "ssd/involution.hpp"
#include "ssd/linear_code.hpp"

#include <array>

namespace ssd {

// Kernel of c -> (wt(c)/2 mod 2) on a self-orthogonal code: the maximal
// doubly-even subcode, of index 1 (code already doubly-even) or 2.
LinearCode doubly_even_subcode(const LinearCode& d);

// A coset rep + base, describing the set difference big \ small when small
// has index 2 in big. Used for shadows.
struct CosetDifference {
    BitVector rep;
    LinearCode base;

    int set_dim() const { return base.dim(); }
    int min_weight(EnumOptions opts = {}) const;
    std::vector<BitVector> elements(EnumOptions opts = {}) const;
};

CosetDifference coset_difference(const LinearCode& big, const LinearCode& small);

// Shadow of a self-orthogonal, non-doubly-even code: dual(D_0) \ dual(D)
// where D_0 is the maximal doubly-even subcode.
CosetDifference shadow(const LinearCode& d);

// The three self-dual codes squeezed between a semi self-dual D and its dual,
// one per nonzero class of the 2-dimensional quotient dual(D)/D.
std::array<LinearCode, 3> selfdual_between(const LinearCode& d);

// Greedy extension of a self-orthogonal code containing the all-ones word to
// a semi self-dual code, adjoining dual basis rows in RREF order until the
// codimension drops to 2.
LinearCode extract_semi_selfdual(const LinearCode& e);

bool stabilizes(const LinearCode& c, const Involution& s);

// subcode of words fixed by s, i.e. the kernel of (id + s) restricted to c
LinearCode fixed_code(const LinearCode& c, const Involution& s);

// Reads one coordinate per orbit pair. Every generator must be constant on
// the pairs (true for any code of s-fixed words).
LinearCode project_pi(const LinearCode& fixed, const PairScheme& p);

struct FreeModuleCheck {
    bool free_module = false;
    LinearCode pi_image;       // pi(C(sigma)), length n/2
};

// A self-dual code with a fixed-point-free stabilizing involution is a free
// module over F_2<sigma> exactly when the projected fixed code is self-dual.
// Also verifies pi({c + sigma(c)}) = dual(pi(C(sigma))) as a consistency check.
FreeModuleCheck is_free_module(const LinearCode& c, const Involution& s);

}  // namespace ssd
