#include "ssd/code_ops.hpp"

#include "ssd/sweep.hpp"

#include <stdexcept>

namespace ssd {

LinearCode doubly_even_subcode(const LinearCode& d) {
    if (!d.is_self_orthogonal())
        throw std::invalid_argument("doubly_even_subcode: code is not self-orthogonal");
    // wt/2 mod 2 is linear on a self-orthogonal code; split the basis by it
    const BitMatrix& g = d.generator();
    int split = -1;
    for (int i = 0; i < d.dim(); ++i)
        if ((g.row(i).weight() / 2) % 2 == 1) { split = i; break; }
    if (split < 0) return d;
    BitMatrix m(0, d.length());
    for (int i = 0; i < d.dim(); ++i) {
        if (i == split) continue;
        BitVector r = g.row(i);
        if ((r.weight() / 2) % 2 == 1) r ^= g.row(split);
        m.append_row(std::move(r));
    }
    return LinearCode::from_generators(m);
}

int CosetDifference::min_weight(EnumOptions opts) const {
    if (base.dim() > opts.cap) throw enumeration_cap_error(base.dim(), opts.cap);
    return sweep_min_weight(base.generator().row_list(), rep, /*skip_zero=*/false,
                            opts.threads);
}

std::vector<BitVector> CosetDifference::elements(EnumOptions opts) const {
    if (base.dim() > opts.cap) throw enumeration_cap_error(base.dim(), opts.cap);
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << base.dim());
    sweep_all(base.generator().row_list(), rep,
              [&](const BitVector& w, std::uint64_t) { out.push_back(w); });
    return out;
}

CosetDifference coset_difference(const LinearCode& big, const LinearCode& small) {
    if (big.length() != small.length() || big.dim() != small.dim() + 1 ||
        !big.contains_code(small))
        throw std::invalid_argument("coset_difference: expected an index-2 subcode");
    for (int i = 0; i < big.dim(); ++i) {
        const BitVector& r = big.generator().row(i);
        if (!small.contains(r)) return CosetDifference{r, small};
    }
    throw std::logic_error("coset_difference: no representative found");
}

CosetDifference shadow(const LinearCode& d) {
    if (!d.is_self_orthogonal())
        throw std::invalid_argument("shadow: code is not self-orthogonal");
    if (d.is_doubly_even())
        throw std::invalid_argument("shadow: code is doubly-even, the shadow coset is undefined");
    return coset_difference(doubly_even_subcode(d).dual(), d.dual());
}

std::array<LinearCode, 3> selfdual_between(const LinearCode& d) {
    if (!d.is_semi_self_dual())
        throw std::invalid_argument("selfdual_between: code is not semi self-dual");
    LinearCode dp = d.dual();
    // two generators of the 2-dimensional quotient dual/d
    BitVector t1(d.length()), t2(d.length());
    bool have1 = false;
    LinearCode grown = d;
    for (int i = 0; i < dp.dim(); ++i) {
        const BitVector& r = dp.generator().row(i);
        if (grown.contains(r)) continue;
        if (!have1) {
            t1 = r;
            have1 = true;
            grown = grown.extended_by(r);
        } else {
            t2 = r;
            break;
        }
    }
    std::array<LinearCode, 3> out{d.extended_by(t1), d.extended_by(t2),
                                  d.extended_by(t1 ^ t2)};
    for (const auto& c : out)
        if (!c.is_self_dual())
            throw std::logic_error("selfdual_between: extension is not self-dual");
    return out;
}

LinearCode extract_semi_selfdual(const LinearCode& e) {
    if (!e.is_self_orthogonal())
        throw std::invalid_argument("extract_semi_selfdual: code is not self-orthogonal");
    if (!e.contains_all_ones())
        throw std::invalid_argument("extract_semi_selfdual: code lacks the all-ones word");
    int codim = e.length() - 2 * e.dim();
    if (codim % 2 != 0)
        throw std::invalid_argument("extract_semi_selfdual: odd codimension, no extension exists");
    if (codim < 2)
        throw std::invalid_argument("extract_semi_selfdual: codimension below 2");
    LinearCode d = e;
    while (d.length() - 2 * d.dim() > 2) {
        // every dual word is even (the dual sits inside the hyperplane of 1),
        // so the first dual basis row outside d is an admissible extension
        LinearCode dp = d.dual();
        bool grew = false;
        for (int i = 0; i < dp.dim(); ++i) {
            const BitVector& r = dp.generator().row(i);
            if (d.contains(r)) continue;
            d = d.extended_by(r);
            grew = true;
            break;
        }
        if (!grew) throw std::logic_error("extract_semi_selfdual: stuck before codimension 2");
    }
    if (!d.is_semi_self_dual())
        throw std::logic_error("extract_semi_selfdual: extension failed to be semi self-dual");
    return d;
}

bool stabilizes(const LinearCode& c, const Involution& s) {
    if (c.length() != s.size()) throw std::invalid_argument("stabilizes: length mismatch");
    for (int i = 0; i < c.dim(); ++i)
        if (!c.contains(s.apply(c.generator().row(i)))) return false;
    return true;
}

LinearCode fixed_code(const LinearCode& c, const Involution& s) {
    if (c.length() != s.size()) throw std::invalid_argument("fixed_code: length mismatch");
    // rows of (id + s) applied to the basis; the fixed code is spanned by the
    // combinations in the left kernel
    BitMatrix m(0, c.length());
    for (int i = 0; i < c.dim(); ++i) {
        const BitVector& r = c.generator().row(i);
        m.append_row(r ^ s.apply(r));
    }
    BitMatrix lk = kernel(transpose(m));
    BitMatrix fixed(0, c.length());
    for (int i = 0; i < lk.rows(); ++i) {
        BitVector w(c.length());
        for (int j = 0; j < c.dim(); ++j)
            if (lk.row(i).get(j)) w ^= c.generator().row(j);
        fixed.append_row(std::move(w));
    }
    return LinearCode::from_generators(fixed);
}

LinearCode project_pi(const LinearCode& fixed, const PairScheme& p) {
    int n = fixed.length();
    if (static_cast<int>(p.pairs.size()) * 2 != n)
        throw std::invalid_argument("project_pi: pair scheme does not cover the length");
    BitMatrix m(fixed.dim(), n / 2);
    for (int i = 0; i < fixed.dim(); ++i) {
        const BitVector& r = fixed.generator().row(i);
        for (std::size_t j = 0; j < p.pairs.size(); ++j) {
            auto [a, b] = p.pairs[j];
            if (r.get(a) != r.get(b))
                throw std::invalid_argument("project_pi: generator not constant on orbit pairs");
            if (r.get(a)) m.row(i).set(static_cast<int>(j), true);
        }
    }
    return LinearCode::from_generators(m);
}

FreeModuleCheck is_free_module(const LinearCode& c, const Involution& s) {
    if (!c.is_self_dual())
        throw std::invalid_argument("is_free_module: code is not self-dual");
    if (!s.is_fixed_point_free())
        throw std::invalid_argument("is_free_module: involution has fixed points");
    if (!stabilizes(c, s))
        throw std::invalid_argument("is_free_module: involution does not stabilize the code");

    PairScheme p = PairScheme::from_involution(s);
    LinearCode fixed = fixed_code(c, s);
    LinearCode pi = project_pi(fixed, p);

    // image of (id + s): all words c + s(c), again fixed and pair-constant
    BitMatrix m(0, c.length());
    for (int i = 0; i < c.dim(); ++i) {
        const BitVector& r = c.generator().row(i);
        m.append_row(r ^ s.apply(r));
    }
    LinearCode image = project_pi(LinearCode::from_generators(m), p);
    if (!(image == pi.dual()))
        throw std::logic_error("is_free_module: projected (id+s)-image differs from the dual of the projected fixed code");

    bool free1 = pi.is_self_dual();
    bool free2 = 2 * fixed.dim() == c.dim();
    if (free1 != free2)
        throw std::logic_error("is_free_module: rank criterion disagrees with self-duality criterion");
    return FreeModuleCheck{free1, pi};
}

}  // namespace ssd
