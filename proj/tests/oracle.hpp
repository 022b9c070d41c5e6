#pragma once

// Brute-force reference implementations used to cross-check the library.
// Deliberately independent of the gray-code sweep: every word is rebuilt
// from scratch by masking rows.

#include "ssd/bitvec.hpp"
#include "ssd/linear_code.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<ssd::BitVector> all_words(const std::vector<ssd::BitVector>& rows, int n) {
    std::vector<ssd::BitVector> out;
    const std::uint64_t total = std::uint64_t{1} << rows.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ssd::BitVector w(n);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if ((mask >> j) & 1) w = w ^ rows[j];
        out.push_back(w);
    }
    return out;
}

inline std::vector<ssd::BitVector> all_words(const ssd::LinearCode& c) {
    return all_words(c.generator().row_list(), c.length());
}

inline int min_weight(const ssd::LinearCode& c) {
    int best = c.length() + 1;
    for (const auto& w : all_words(c))
        if (!w.is_zero() && w.weight() < best) best = w.weight();
    return best;
}

inline std::set<std::string> word_set(const ssd::LinearCode& c) {
    std::set<std::string> s;
    for (const auto& w : all_words(c)) s.insert(w.to_string());
    return s;
}

inline ssd::BitVector random_vector(std::mt19937_64& rng, int n) {
    ssd::BitVector v(n);
    for (int i = 0; i < n; ++i)
        if (rng() & 1) v.set(i, true);
    return v;
}

inline ssd::BitMatrix random_matrix(std::mt19937_64& rng, int r, int n) {
    ssd::BitMatrix m(0, n);
    for (int i = 0; i < r; ++i) m.append_row(random_vector(rng, n));
    return m;
}

}  // namespace oracle
