#include "ssd/gleason.hpp"

#include "ssd/code_ops.hpp"
#include "ssd/series.hpp"

#include <stdexcept>

namespace ssd {

bool GleasonDecomposition::eps_nonnegative_integers() const {
    for (const auto& v : eps)
        if (!is_nonnegative_integer(v)) return false;
    return true;
}

WeightEnumerator build_B(const LinearCode& d, EnumOptions opts) {
    if (!d.is_semi_self_dual())
        throw std::invalid_argument("build_B: code is not semi self-dual");
    WeightEnumerator a = enumerate_weights(d, opts);
    WeightEnumerator dual_w = macwilliams(a, d.dim());
    dual_w *= Rational(1, 2);
    return a - dual_w;
}

namespace {

// dehomogenized module basis element in Y = y^2 (with x = 1):
// (1 - 6Y + Y^2) (1 + Y)^(N-2-4i) Y^i (1 - Y)^(2i)
TruncatedSeries basis_element(int N, int i) {
    TruncatedSeries quad(N);
    quad[0] = 1;
    quad[1] = -6;
    quad[2] = 1;
    return quad * TruncatedSeries::binomial_power(N, +1, 1, N - 2 - 4L * i) *
           TruncatedSeries::monomial(N, i) *
           TruncatedSeries::binomial_power(N, -1, 1, 2L * i);
}

}  // namespace

GleasonDecomposition gleason_decompose(const WeightEnumerator& b) {
    int n = b.degree();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("gleason_decompose: degree must be even and at least 4");
    for (int w = 1; w <= n; w += 2)
        if (b.coeff(w) != 0)
            throw std::invalid_argument("gleason_decompose: odd powers of y present");

    int N = n / 2;
    int M = (N - 2) / 4;
    TruncatedSeries residual(N);
    for (int j = 0; j <= N; ++j) residual[j] = b.coeff(2 * j);

    GleasonDecomposition dec;
    dec.N = N;
    dec.e.resize(M + 1);
    dec.eps.resize(M + 1);
    for (int i = 0; i <= M; ++i) {
        // each basis element starts at Y^i with coefficient 1
        Rational ei = residual[i];
        dec.e[i] = ei;
        if (ei != 0) {
            TruncatedSeries phi = basis_element(N, i);
            for (int j = i; j <= N; ++j) residual[j] -= ei * phi[j];
        }
        Rational scaled = pow2(N - 1 - 6L * i) * ei;
        dec.eps[i] = (i % 2 == 0) ? scaled : -scaled;
    }
    for (int j = 0; j <= N; ++j)
        if (residual[j] != 0)
            throw std::runtime_error("gleason_decompose: nonzero residual, input outside the invariant module");
    return dec;
}

WeightEnumerator F_from_decomposition(const GleasonDecomposition& dec) {
    int N = dec.N;
    if (N < 2) throw std::invalid_argument("F_from_decomposition: need N >= 2");
    int M = (N - 2) / 4;
    if (static_cast<int>(dec.eps.size()) > M + 1)
        for (std::size_t i = M + 1; i < dec.eps.size(); ++i)
            if (dec.eps[i] != 0)
                throw std::invalid_argument("F_from_decomposition: epsilon index out of range, negative powers");

    WeightEnumerator f(2 * N);
    for (std::size_t i = 0; i < dec.eps.size() && static_cast<int>(i) <= M; ++i) {
        const Rational& ei = dec.eps[i];
        if (ei == 0) continue;
        int base = N - 2 - 4 * static_cast<int>(i);
        // y^base (1 - y^4)^(2i) (1 + y^4)
        for (int t = 0; t <= 2 * static_cast<int>(i); ++t) {
            Rational c = ei * Rational(binomial(2 * static_cast<long>(i), t));
            if (t % 2) c = -c;
            f.add_coeff(base + 4 * t, c);
            f.add_coeff(base + 4 * t + 4, c);
        }
    }
    return f;
}

WeightEnumerator shadow_F(const LinearCode& d, EnumOptions opts) {
    if (!d.is_semi_self_dual())
        throw std::invalid_argument("shadow_F: code is not semi self-dual");
    if (d.is_doubly_even())
        throw std::invalid_argument("shadow_F: code is doubly-even, its shadow coset is undefined");
    int N = d.length() / 2;
    CosetDifference sh = shadow(d);
    WeightEnumerator hist = enumerate_coset_weights(sh.rep, sh.base, opts);
    int r = ((N - 2) % 4 + 4) % 4;
    WeightEnumerator f(d.length());
    for (int w = r; w <= d.length(); w += 4) f.set_coeff(w, hist.coeff(w));
    return f;
}

IdentityCheck check_enumerator_identities(const LinearCode& d, EnumOptions opts) {
    IdentityCheck out;
    WeightEnumerator b = build_B(d, opts);
    out.dec = gleason_decompose(b);
    out.eps_ok = out.dec.eps_nonnegative_integers();
    out.f_matches = shadow_F(d, opts) == F_from_decomposition(out.dec);
    return out;
}

}  // namespace ssd
