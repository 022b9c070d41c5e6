#include "ssd/involution.hpp"

#include <stdexcept>
#include <string>

namespace ssd {

Involution Involution::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 0 || v >= n) throw std::invalid_argument("Involution: image out of range");
        if (seen[v]) throw std::invalid_argument("Involution: not a permutation");
        seen[v] = true;
    }
    for (int i = 0; i < n; ++i)
        if (images[images[i]] != i)
            throw std::invalid_argument("Involution: permutation has order above 2");
    Involution s;
    s.img_ = std::move(images);
    return s;
}

Involution Involution::from_images_1based(const std::vector<int>& images) {
    std::vector<int> z;
    z.reserve(images.size());
    for (int v : images) z.push_back(v - 1);
    return from_images(std::move(z));
}

Involution Involution::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    Involution s;
    s.img_ = std::move(img);
    return s;
}

bool Involution::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Involution::is_fixed_point_free() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] == i) return false;
    return size() > 0;
}

BitVector Involution::apply(const BitVector& v) const {
    if (v.length() != size()) throw std::invalid_argument("Involution::apply: length mismatch");
    BitVector out(v.length());
    for (int i = 0; i < size(); ++i)
        if (v.get(i)) out.set(img_[i], true);
    return out;
}

std::string Involution::cycle_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i)
        if (img_[i] > i)
            s += "(" + std::to_string(i + 1) + " " + std::to_string(img_[i] + 1) + ")";
    return s.empty() ? "()" : s;
}

PairScheme PairScheme::from_involution(const Involution& s) {
    if (!s.is_fixed_point_free())
        throw std::invalid_argument("PairScheme: involution has fixed points");
    PairScheme p;
    for (int i = 0; i < s.size(); ++i)
        if (s.image(i) > i) p.pairs.emplace_back(i, s.image(i));
    return p;
}

}  // namespace ssd
