#pragma once

#include "ssd/bounds.hpp"
#include "ssd/code_ops.hpp"
#include "ssd/linear_code.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssd {

struct SearchConfig {
    int n = 0;
    std::uint64_t seed = 1;
    long max_steps = 10000;
    int hyperplane_limit = 4095;
    bool doubly_even_only = false;
    int collect_semi = 0;     // keep up to this many cut semi self-dual codes
    int collect_codes = 0;    // keep up to this many visited self-dual codes
    EnumOptions enum_opts;
};

struct SharpnessResult {
    BoundReport bound;
    int best_dual_distance = 0;
    bool sharp = false;           // best_dual_distance == bound.bound
    LinearCode witness;           // semi self-dual code achieving the best value
    long steps_taken = 0;
    long codes_visited = 0;
    std::vector<LinearCode> semi_sample;
    std::vector<LinearCode> code_sample;
};

// One neighbor step (C cap v-perp) + <v> for an even-weight v outside C.
// Preserves length and self-duality.
LinearCode neighbor(const LinearCode& c, const BitVector& v);

// Seeded walk on the neighbor graph starting from a block code (and from the
// extended QR code at n = 24). At every visited self-dual code scans
// hyperplanes containing the all-ones word and records the best dual distance
// of the cut semi self-dual codes; every value is live-checked against the
// table bound. Stops once the bound is reached and the samples are full.
SharpnessResult sharpness_search(const SearchConfig& cfg);

struct InvolutionReport {
    int q = 0;
    LinearCode code;
    Involution sigma;
    LinearCode fixed;
    LinearCode pi_image;
    bool free_module = false;
    int code_distance = 0;
    int pi_distance = 0;
    std::string warning;   // set for lengths outside the verified extremal cases
};

// Extended QR code, projective involution, free-module test: distances and
// the parity prediction for the outcome are verified for q = 23 and 47.
InvolutionReport involution_pipeline(int q, EnumOptions opts = {});

struct NonFreeCase {
    std::string label;
    LinearCode code;
    Involution sigma;
    bool free_module = false;
    LinearCode pi_image;
    std::optional<LinearCode> extracted;   // semi self-dual squeeze witness
    bool chain_ok = true;   // dual(pi) <= D <= dual(D) <= pi and 1 in D
};

// Handcrafted block instances where the projected fixed code fails (or, for
// the cross-pairing control, passes) self-duality.
std::vector<NonFreeCase> non_free_witness();

}  // namespace ssd
