#pragma once

#include "ssd/bitvec.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace ssd {

// Gray-code enumeration of a coset offset + span(rows). Counter i corresponds
// to the subset gray(i) = i ^ (i >> 1) of rows, so consecutive counters differ
// by a single row XOR. rows.size() must be < 64.

inline BitVector combination_at(const std::vector<BitVector>& rows,
                                const BitVector& offset, std::uint64_t counter) {
    BitVector w = offset;
    std::uint64_t g = counter ^ (counter >> 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
        if ((g >> j) & 1) w ^= rows[j];
    return w;
}

// visit(word, counter) for every counter in [begin, end)
template <class Visit>
void sweep_range(const std::vector<BitVector>& rows, const BitVector& offset,
                 std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    if (begin >= end) return;
    BitVector w = combination_at(rows, offset, begin);
    visit(w, begin);
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        visit(w, i);
    }
}

template <class Visit>
void sweep_all(const std::vector<BitVector>& rows, const BitVector& offset,
               Visit&& visit) {
    sweep_range(rows, offset, 0, std::uint64_t{1} << rows.size(),
                std::forward<Visit>(visit));
}

}  // namespace ssd
