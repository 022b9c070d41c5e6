#pragma once

#include "ssd/bitvec.hpp"

#include <utility>
#include <vector>

namespace ssd {

// A coordinate permutation of order dividing 2, stored as 0-based images.
class Involution {
public:
    static Involution from_images(std::vector<int> images_0based);
    static Involution from_images_1based(const std::vector<int>& images);
    static Involution identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_.at(i); }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    bool is_fixed_point_free() const;

    // permuted vector: result[image(i)] = v[i]
    BitVector apply(const BitVector& v) const;

    // 1-based cycle notation, e.g. "(1 2)(3 4)"
    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

// The orbit pairs of a fixed-point-free involution, each listed as (a, b)
// with a < b and ordered by a. Projection reads coordinate a of every pair.
struct PairScheme {
    std::vector<std::pair<int, int>> pairs;
    static PairScheme from_involution(const Involution& s);
};

}  // namespace ssd
