#include "ssd/weight_enumerator.hpp"

#include <sstream>
#include <stdexcept>

namespace ssd {

WeightEnumerator& WeightEnumerator::operator+=(const WeightEnumerator& o) {
    if (n_ != o.n_) throw std::invalid_argument("WeightEnumerator: degree mismatch");
    for (int w = 0; w <= n_; ++w) c_[w] += o.c_[w];
    return *this;
}

WeightEnumerator& WeightEnumerator::operator-=(const WeightEnumerator& o) {
    if (n_ != o.n_) throw std::invalid_argument("WeightEnumerator: degree mismatch");
    for (int w = 0; w <= n_; ++w) c_[w] -= o.c_[w];
    return *this;
}

WeightEnumerator& WeightEnumerator::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

bool WeightEnumerator::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

Rational WeightEnumerator::sum() const {
    Rational s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

int WeightEnumerator::top_weight() const {
    for (int w = n_; w >= 0; --w)
        if (c_[w] != 0) return w;
    return -1;
}

int WeightEnumerator::min_positive_weight() const {
    for (int w = 1; w <= n_; ++w)
        if (c_[w] != 0) return w;
    return -1;
}

bool WeightEnumerator::all_nonnegative() const {
    for (const auto& c : c_)
        if (c < 0) return false;
    return true;
}

bool WeightEnumerator::all_integer() const {
    for (const auto& c : c_)
        if (!is_integer(c)) return false;
    return true;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string monomial(const char* var, int e) {
    if (e == 0) return "";
    std::string s = var;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

std::string WeightEnumerator::to_string() const {
    std::string s;
    for (int w = 0; w <= n_; ++w) {
        if (c_[w] == 0) continue;
        std::string term;
        std::string xs = monomial("x", n_ - w), ys = monomial("y", w);
        if (c_[w] != 1 || (xs.empty() && ys.empty())) term += rational_str(c_[w]);
        if (!xs.empty()) term += (term.empty() ? "" : " ") + xs;
        if (!ys.empty()) term += (term.empty() ? "" : " ") + ys;
        s += s.empty() ? term : " + " + term;
    }
    return s.empty() ? "0" : s;
}

std::string WeightEnumerator::to_string_at_one() const {
    std::string s;
    for (int w = 0; w <= n_; ++w) {
        if (c_[w] == 0) continue;
        std::string ys = monomial("y", w);
        std::string term;
        if (c_[w] != 1 || ys.empty()) term += rational_str(c_[w]);
        if (!ys.empty()) term += (term.empty() ? "" : " ") + ys;
        s += s.empty() ? term : " + " + term;
    }
    return s.empty() ? "0" : s;
}

WeightEnumerator enumerate_weights(const LinearCode& c, EnumOptions opts) {
    if (c.dim() > opts.cap) throw enumeration_cap_error(c.dim(), opts.cap);
    auto hist = sweep_weight_histogram(c.generator().row_list(), BitVector(c.length()),
                                       opts.threads);
    WeightEnumerator w(c.length());
    for (int i = 0; i <= c.length(); ++i)
        if (hist[i]) w.set_coeff(i, Rational(hist[i]));
    return w;
}

WeightEnumerator enumerate_coset_weights(const BitVector& rep, const LinearCode& base,
                                         EnumOptions opts) {
    if (rep.length() != base.length())
        throw std::invalid_argument("enumerate_coset_weights: length mismatch");
    if (base.dim() > opts.cap) throw enumeration_cap_error(base.dim(), opts.cap);
    auto hist = sweep_weight_histogram(base.generator().row_list(), rep, opts.threads);
    WeightEnumerator w(base.length());
    for (int i = 0; i <= base.length(); ++i)
        if (hist[i]) w.set_coeff(i, Rational(hist[i]));
    return w;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, int dim) {
    int n = w.degree();
    if (dim < 0) throw std::invalid_argument("macwilliams: negative dimension");
    // coefficient of x^(n-j) y^j in (x+y)^(n-v) (x-y)^v is the Krawtchouk sum
    // over h of (-1)^h C(v,h) C(n-v, j-h)
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
    }
    WeightEnumerator out(n);
    Rational scale = pow2(-dim);
    for (int j = 0; j <= n; ++j) {
        Rational acc = 0;
        for (int v = 0; v <= n; ++v) {
            if (w.coeff(v) == 0) continue;
            BigInt k = 0;
            for (int h = std::max(0, j - (n - v)); h <= std::min(v, j); ++h) {
                BigInt t = binom[v][h] * binom[n - v][j - h];
                if (h % 2) k -= t; else k += t;
            }
            acc += w.coeff(v) * Rational(k);
        }
        out.set_coeff(j, acc * scale);
    }
    return out;
}

}  // namespace ssd
