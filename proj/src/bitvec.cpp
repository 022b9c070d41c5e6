#include "ssd/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace ssd {

BitVector::BitVector(int n) : len_(n) {
    if (n < 0) throw std::invalid_argument("BitVector: negative length");
    w_.assign((n + 63) / 64, 0);
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVector: expected only '0'/'1' characters");
    }
    return v;
}

BitVector BitVector::unit(int n, int i) {
    BitVector v(n);
    v.set(i, true);
    return v;
}

BitVector BitVector::ones(int n) {
    BitVector v(n);
    for (auto& w : v.w_) w = ~std::uint64_t{0};
    if (n % 64) v.w_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return v;
}

bool BitVector::get(int i) const {
    if (i < 0 || i >= len_) throw std::out_of_range("BitVector::get");
    return (w_[i / 64] >> (i % 64)) & 1;
}

void BitVector::set(int i, bool v) {
    if (i < 0 || i >= len_) throw std::out_of_range("BitVector::set");
    std::uint64_t m = std::uint64_t{1} << (i % 64);
    if (v)
        w_[i / 64] |= m;
    else
        w_[i / 64] &= ~m;
}

void BitVector::flip(int i) {
    if (i < 0 || i >= len_) throw std::out_of_range("BitVector::flip");
    w_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

int BitVector::weight() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool BitVector::is_zero() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch in ^");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

int BitVector::dot(const BitVector& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch in dot");
    std::uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

int BitVector::overlap(const BitVector& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch in overlap");
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace ssd
