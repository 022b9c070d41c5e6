#include "ssd/explorer.hpp"

#include "ssd/qr.hpp"
#include "ssd/series.hpp"

#include <random>
#include <stdexcept>

namespace ssd {

namespace {

// rows of c with the one odd against a folded in, i.e. a basis of c cap a-perp
LinearCode cut_against(const LinearCode& c, const BitVector& a) {
    BitMatrix m(0, c.length());
    std::optional<BitVector> odd;
    for (int i = 0; i < c.dim(); ++i) {
        const BitVector& r = c.generator().row(i);
        if (!r.dot(a))
            m.append_row(r);
        else if (!odd)
            odd = r;
        else
            m.append_row(r ^ *odd);
    }
    if (!odd) throw std::logic_error("cut_against: functional vanishes on the code");
    return LinearCode::from_generators(m);
}

BitVector random_word(std::mt19937_64& rng, int n) {
    BitVector v(n);
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        if (i % 64 == 0) bits = rng();
        if (bits >> (i % 64) & 1) v.set(i, true);
    }
    return v;
}

LinearCode e8_code() {
    return LinearCode::from_generators(
        BitMatrix::from_strings({"11110000", "00111100", "00001111", "01010101"}));
}

LinearCode block_repeat(const LinearCode& block, int copies) {
    LinearCode out = block;
    for (int i = 1; i < copies; ++i) out = block_sum(out, block);
    return out;
}

}  // namespace

LinearCode neighbor(const LinearCode& c, const BitVector& v) {
    if (!c.is_self_dual()) throw std::invalid_argument("neighbor: code is not self-dual");
    if (v.length() != c.length()) throw std::invalid_argument("neighbor: length mismatch");
    if (v.weight() % 2 != 0) throw std::invalid_argument("neighbor: vector has odd weight");
    if (c.contains(v)) throw std::invalid_argument("neighbor: vector already lies in the code");
    LinearCode out = cut_against(c, v).extended_by(v);
    if (!out.is_self_dual()) throw std::logic_error("neighbor: step lost self-duality");
    return out;
}

SharpnessResult sharpness_search(const SearchConfig& cfg) {
    if (cfg.n < 4 || cfg.n % 2 != 0)
        throw std::invalid_argument("sharpness_search: n must be an even integer >= 4");
    if (cfg.doubly_even_only && cfg.n % 8 != 0)
        throw std::invalid_argument(
            "sharpness_search: doubly-even self-dual codes exist only for 8 | n");

    SharpnessResult result;
    result.bound = theorem_bound(cfg.n, cfg.doubly_even_only);

    std::vector<LinearCode> starts;
    starts.push_back(cfg.doubly_even_only ? block_repeat(e8_code(), cfg.n / 8)
                                          : block_repeat(LinearCode::repetition(2), cfg.n / 2));
    if (cfg.n == 24) starts.push_back(extended_qr_code(23));

    std::mt19937_64 rng(cfg.seed);
    const BitVector ones = BitVector::ones(cfg.n);

    auto done = [&] {
        return result.best_dual_distance == result.bound.bound &&
               static_cast<int>(result.semi_sample.size()) >= cfg.collect_semi;
    };

    // scan hyperplanes a-perp with 1 in D = C cap a-perp; a runs over the
    // even-popcount masks of the non-pivot columns, i.e. dual(C)/C = F_2^k
    auto visit = [&](const LinearCode& c) {
        ++result.codes_visited;
        if (static_cast<int>(result.code_sample.size()) < cfg.collect_codes)
            result.code_sample.push_back(c);
        const int dc = *c.min_distance(cfg.enum_opts);
        const bool collecting = static_cast<int>(result.semi_sample.size()) < cfg.collect_semi;
        if (dc <= result.best_dual_distance && !collecting) return;

        std::vector<int> nonpivot;
        {
            std::vector<char> is_pivot(cfg.n, 0);
            for (int p : c.reduced().pivots) is_pivot[p] = 1;
            for (int j = 0; j < cfg.n; ++j)
                if (!is_pivot[j]) nonpivot.push_back(j);
        }
        std::vector<BitVector> rows;
        for (int i = 0; i < c.dim(); ++i) rows.push_back(c.generator().row(i));

        int scanned = 0;
        const std::uint64_t mask_count = std::uint64_t(1) << nonpivot.size();
        for (std::uint64_t m = 1; m < mask_count && scanned < cfg.hyperplane_limit; ++m) {
            if (__builtin_popcountll(m) % 2 != 0) continue;  // keeps 1 in the hyperplane
            ++scanned;
            BitVector a(cfg.n);
            for (std::size_t j = 0; j < nonpivot.size(); ++j)
                if (m >> j & 1) a.flip(nonpivot[j]);
            const int dd =
                std::min(dc, sweep_min_weight(rows, a, false, cfg.enum_opts.threads));
            if (dd > result.bound.bound)
                throw std::logic_error(
                    "sharpness_search: dual distance exceeds the proven bound");
            const bool improves = dd > result.best_dual_distance;
            if (improves || collecting) {
                LinearCode d = cut_against(c, a);
                if (!d.is_semi_self_dual())
                    throw std::logic_error("sharpness_search: cut code is not semi self-dual");
                if (improves) {
                    result.best_dual_distance = dd;
                    result.witness = d;
                }
                if (static_cast<int>(result.semi_sample.size()) < cfg.collect_semi)
                    result.semi_sample.push_back(d);
            }
            if (done()) return;
        }
    };

    const long share = cfg.max_steps / static_cast<long>(starts.size());
    for (const LinearCode& start : starts) {
        if (done()) break;
        LinearCode c = start;
        visit(c);
        for (long step = 0; step < share && !done(); ++step) {
            BitVector v(cfg.n);
            int tries = 0;
            do {
                if (++tries > 4096)
                    throw std::runtime_error("sharpness_search: no admissible step vector");
                v = random_word(rng, cfg.n);
                if (cfg.doubly_even_only && v.weight() % 4 != 0) continue;
                if (!cfg.doubly_even_only && v.weight() % 2 != 0) continue;
                if (!c.contains(v)) break;
            } while (true);
            c = neighbor(c, v);
            ++result.steps_taken;
            visit(c);
        }
    }

    result.sharp = result.best_dual_distance == result.bound.bound;
    if (result.best_dual_distance > 0) {
        // independent re-check straight from the witness
        if (!result.witness.is_semi_self_dual())
            throw std::logic_error("sharpness_search: witness lost semi self-duality");
        if (*result.witness.dual().min_distance(cfg.enum_opts) != result.best_dual_distance)
            throw std::logic_error("sharpness_search: witness dual distance mismatch");
    }
    return result;
}

InvolutionReport involution_pipeline(int q, EnumOptions opts) {
    InvolutionReport report;
    report.q = q;
    report.code = extended_qr_code(q);
    report.sigma = qr_involution(q);
    if (!report.code.is_self_dual())
        throw std::runtime_error("involution_pipeline: code is not self-dual");
    if (!stabilizes(report.code, report.sigma))
        throw std::runtime_error("involution_pipeline: involution does not stabilize the code");
    if (!report.sigma.is_fixed_point_free())
        throw std::runtime_error("involution_pipeline: involution has fixed points");

    report.code_distance = *report.code.min_distance(opts);
    report.fixed = fixed_code(report.code, report.sigma);
    const FreeModuleCheck fm = is_free_module(report.code, report.sigma);
    report.free_module = fm.free_module;
    report.pi_image = fm.pi_image;
    report.pi_distance = *report.pi_image.min_distance(opts);
    if (2 * report.pi_distance < report.code_distance)
        throw std::runtime_error(
            "involution_pipeline: projected distance fell below half the code distance");

    if (q == 23 || q == 47) {
        const int m = (q + 1) / 24;
        if (report.code_distance != 4 * m + 4)
            throw std::runtime_error("involution_pipeline: code is not extremal");
        const bool expected_free = m % 2 == 1 || binom_parity(m);
        if (report.free_module != expected_free)
            throw std::runtime_error(
                "involution_pipeline: free-module outcome contradicts the parity prediction");
        if (report.free_module && !report.pi_image.is_self_dual())
            throw std::runtime_error("involution_pipeline: free module with non-self-dual image");
    } else {
        report.warning =
            "length outside the verified extremal cases; distance and freeness not asserted";
    }
    return report;
}

std::vector<NonFreeCase> non_free_witness() {
    std::vector<NonFreeCase> cases;
    const LinearCode c4 =
        LinearCode::from_generators(BitMatrix::from_strings({"1100", "0011"}));

    {
        NonFreeCase w;
        w.label = "n=4, pairing within the blocks";
        w.code = c4;
        w.sigma = Involution::from_images_1based({2, 1, 4, 3});
        const FreeModuleCheck fm = is_free_module(w.code, w.sigma);
        w.free_module = fm.free_module;
        w.pi_image = fm.pi_image;
        cases.push_back(std::move(w));
    }
    {
        NonFreeCase w;
        w.label = "n=4, cross pairing (control)";
        w.code = c4;
        w.sigma = Involution::from_images_1based({3, 4, 1, 2});
        const FreeModuleCheck fm = is_free_module(w.code, w.sigma);
        w.free_module = fm.free_module;
        w.pi_image = fm.pi_image;
        cases.push_back(std::move(w));
    }
    {
        NonFreeCase w;
        w.label = "n=8, two blocks, pairing within the blocks";
        w.code = block_sum(c4, c4);
        w.sigma = Involution::from_images_1based({2, 1, 4, 3, 6, 5, 8, 7});
        const FreeModuleCheck fm = is_free_module(w.code, w.sigma);
        w.free_module = fm.free_module;
        w.pi_image = fm.pi_image;
        // squeeze a semi self-dual code between dual(pi) and pi
        const LinearCode grown =
            fm.pi_image.dual().extended_by(BitVector::ones(fm.pi_image.length()));
        w.extracted = extract_semi_selfdual(grown);
        const LinearCode& d = *w.extracted;
        w.chain_ok = d.contains_code(fm.pi_image.dual()) && d.dual().contains_code(d) &&
                     fm.pi_image.contains_code(d.dual()) && d.contains_all_ones();
        cases.push_back(std::move(w));
    }
    return cases;
}

}  // namespace ssd
