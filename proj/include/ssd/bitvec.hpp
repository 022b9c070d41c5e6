#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ssd {

// Vector over GF(2), packed 64 coordinates per word. Coordinate 0 is the
// leftmost character in the string form and bit 0 of word 0. Unused bits of
// the last word are kept zero, so whole-word operations (==, popcount) are
// valid without masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int n);

    static BitVector from_string(std::string_view s);  // characters '0'/'1'
    static BitVector unit(int n, int i);
    static BitVector ones(int n);

    int length() const { return len_; }
    bool get(int i) const;
    void set(int i, bool v);
    void flip(int i);

    int weight() const;
    bool is_zero() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector&) const = default;

    // inner product over GF(2); lengths must match
    int dot(const BitVector& o) const;
    // weight of the coordinatewise AND, i.e. |supp(a) & supp(b)|
    int overlap(const BitVector& o) const;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    int len_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace ssd
