#include "ssd/qr.hpp"

#include <stdexcept>
#include <string>

namespace ssd {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

std::vector<int> quadratic_residues(int q) {
    std::vector<bool> mark(q, false);
    for (int z = 1; z < q; ++z) mark[static_cast<int>((long long)z * z % q)] = true;
    std::vector<int> out;
    for (int r = 1; r < q; ++r)
        if (mark[r]) out.push_back(r);
    return out;
}

namespace {

void check_qr_prime(int q) {
    if (!is_prime(q) || q % 8 == 3 || q % 8 == 5 || q == 2)
        throw std::invalid_argument("q = " + std::to_string(q) +
                                    " is not a prime with q = +-1 (mod 8)");
    if (q > 60) throw std::invalid_argument("q above the supported range (q <= 60)");
}

BitVector rotate(const BitVector& v, int s) {
    int q = v.length();
    BitVector out(q);
    for (int i = 0; i < q; ++i)
        if (v.get(i)) out.set((i + s) % q, true);
    return out;
}

// cyclic code of length q spanned by all shifts of the seed word
LinearCode cyclic_span(const BitVector& seed) {
    BitMatrix m(0, seed.length());
    for (int s = 0; s < seed.length(); ++s) m.append_row(rotate(seed, s));
    return LinearCode::from_generators(m);
}

}  // namespace

LinearCode extended_qr_code(int q) {
    check_qr_prime(q);

    BitVector eq(q), en(q);
    for (int r : quadratic_residues(q)) eq.set(r, true);
    for (int z = 1; z < q; ++z)
        if (!eq.get(z)) en.set(z, true);
    BitVector eq1 = eq, en1 = en;
    eq1.flip(0);
    en1.flip(0);

    // of the four idempotents, two generate cyclic codes of rank (q+1)/2;
    // take the first in a fixed order
    LinearCode cyclic(q);
    for (const BitVector& cand : {eq, eq1, en, en1}) {
        LinearCode c = cyclic_span(cand);
        if (c.dim() == (q + 1) / 2) { cyclic = c; break; }
    }
    if (cyclic.dim() != (q + 1) / 2)
        throw std::logic_error("extended_qr_code: no idempotent of rank (q+1)/2");

    BitMatrix ext(cyclic.dim(), q + 1);
    for (int i = 0; i < cyclic.dim(); ++i) {
        const BitVector& r = cyclic.generator().row(i);
        for (int j = 0; j < q; ++j)
            if (r.get(j)) ext.row(i).set(j, true);
        if (r.weight() % 2 == 1) ext.row(i).set(q, true);
    }
    LinearCode code = LinearCode::from_generators(ext);

    if (code.dim() != (q + 1) / 2)
        throw std::logic_error("extended_qr_code: extension changed the rank");
    if (q % 8 == 7 && !(code.is_self_dual() && code.is_doubly_even()))
        throw std::logic_error("extended_qr_code: expected a doubly-even self-dual code");
    return code;
}

Involution qr_involution(int q) {
    check_qr_prime(q);
    if (q % 4 != 3)
        throw std::invalid_argument(
            "q = " + std::to_string(q) +
            ": -1 is a square mod q, so z -> -1/z has fixed points");

    std::vector<int> img(q + 1);
    img[0] = q;  // 0 <-> infinity
    img[q] = 0;
    for (int z = 1; z < q; ++z) {
        // inverse by Fermat: z^(q-2) mod q
        long long inv = 1, base = z, e = q - 2;
        while (e) {
            if (e & 1) inv = inv * base % q;
            base = base * base % q;
            e >>= 1;
        }
        img[z] = static_cast<int>((q - inv) % q);
    }
    Involution s = Involution::from_images(std::move(img));
    if (!s.is_fixed_point_free())
        throw std::logic_error("qr_involution: unexpected fixed point");
    return s;
}

}  // namespace ssd
