#pragma once

#include "ssd/involution.hpp"
#include "ssd/linear_code.hpp"

#include <vector>

namespace ssd {

bool is_prime(int q);

// nonzero quadratic residues mod an odd prime
std::vector<int> quadratic_residues(int q);

// Extended quadratic residue code of length q + 1 for a prime q with
// q = +-1 (mod 8). Coordinates 0..q-1 are the field elements, coordinate q is
// the added parity position (infinity). The cyclic part is the span of the
// shifts of a quadratic-residue idempotent of rank (q+1)/2; the extension
// appends the overall parity bit. Self-dual and doubly-even for q = 7 (mod 8).
LinearCode extended_qr_code(int q);

// z -> -1/z on the projective line, with 0 and infinity swapped. Fixed point
// free exactly when -1 is a non-residue, so q = 3 (mod 4) is required.
Involution qr_involution(int q);

}  // namespace ssd
