#pragma once

#include "ssd/bitmatrix.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace ssd {

// Options for operations that enumerate all codewords of a code. cap bounds
// the dimension a full sweep will accept; threads splits the Gray-code range.
struct EnumOptions {
    int cap = 28;
    int threads = 1;
};

struct enumeration_cap_error : std::runtime_error {
    int dim;
    int cap;
    enumeration_cap_error(int dim_, int cap_)
        : std::runtime_error("dimension " + std::to_string(dim_) +
                             " exceeds the enumeration cap of " + std::to_string(cap_) +
                             " information bits"),
          dim(dim_), cap(cap_) {}
};

// A linear code over GF(2), held as the unique RREF basis of its row space.
// Immutable; copies share the lazy caches (dual, minimum distance).
class LinearCode {
public:
    LinearCode() : LinearCode(0) {}
    explicit LinearCode(int n);                       // zero code of length n
    static LinearCode from_generators(const BitMatrix& g);
    static LinearCode repetition(int n);              // span of the all-ones word
    static LinearCode full_space(int n);

    int length() const { return n_; }
    int dim() const { return rr_.rank; }
    const BitMatrix& generator() const { return rr_.rref; }
    const ReduceResult& reduced() const { return rr_; }

    bool contains(const BitVector& v) const;
    bool contains_code(const LinearCode& sub) const;

    LinearCode dual() const;                          // cached

    // Minimum weight of a nonzero codeword by full Gray-code enumeration.
    // Empty optional for the zero code; throws enumeration_cap_error when
    // dim() exceeds opts.cap.
    std::optional<int> min_distance(EnumOptions opts = {}) const;

    bool is_self_orthogonal() const;
    bool is_doubly_even() const;
    bool contains_all_ones() const;
    bool is_self_dual() const;
    bool is_semi_self_dual() const;

    LinearCode extended_by(const BitVector& v) const; // span(C, v)

    // identical row space (RREF is canonical)
    bool operator==(const LinearCode& o) const {
        return n_ == o.n_ && rr_.rref == o.rr_.rref;
    }

private:
    LinearCode(int n, ReduceResult rr);

    int n_;
    ReduceResult rr_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

LinearCode sum_codes(const LinearCode& a, const LinearCode& b);
LinearCode intersection(const LinearCode& a, const LinearCode& b);
// direct sum: coordinates of b appended after those of a
LinearCode block_sum(const LinearCode& a, const LinearCode& b);

// Minimum weight over offset + span(rows). skip_zero drops the empty
// combination (used when offset is the zero word and the zero codeword must
// not count). rows.size() must already be under the enumeration cap.
int sweep_min_weight(const std::vector<BitVector>& rows, const BitVector& offset,
                     bool skip_zero, int threads = 1);

// counts[w] = number of words of weight w in offset + span(rows)
std::vector<std::uint64_t> sweep_weight_histogram(const std::vector<BitVector>& rows,
                                                  const BitVector& offset,
                                                  int threads = 1);

}  // namespace ssd
