#include "ssd/linear_code.hpp"

#include "ssd/sweep.hpp"

#include <algorithm>
#include <thread>

namespace ssd {

struct LinearCode::Cache {
    std::once_flag dual_once;
    std::shared_ptr<const LinearCode> dual;
    std::once_flag dist_once;
    std::optional<int> dist;
};

LinearCode::LinearCode(int n) : n_(n), cache_(std::make_shared<Cache>()) {
    if (n < 0) throw std::invalid_argument("LinearCode: negative length");
    rr_.rref = BitMatrix(0, n);
    rr_.rank = 0;
}

LinearCode::LinearCode(int n, ReduceResult rr)
    : n_(n), rr_(std::move(rr)), cache_(std::make_shared<Cache>()) {}

LinearCode LinearCode::from_generators(const BitMatrix& g) {
    return LinearCode(g.cols(), reduce(g));
}

LinearCode LinearCode::repetition(int n) {
    if (n < 1) throw std::invalid_argument("repetition: length must be positive");
    BitMatrix m(0, n);
    m.append_row(BitVector::ones(n));
    return from_generators(m);
}

LinearCode LinearCode::full_space(int n) {
    return from_generators(BitMatrix::identity(n));
}

bool LinearCode::contains(const BitVector& v) const {
    if (v.length() != n_) throw std::invalid_argument("contains: length mismatch");
    return member(rr_, v);
}

bool LinearCode::contains_code(const LinearCode& sub) const {
    if (sub.length() != n_) throw std::invalid_argument("contains_code: length mismatch");
    for (int i = 0; i < sub.dim(); ++i)
        if (!contains(sub.generator().row(i))) return false;
    return true;
}

LinearCode LinearCode::dual() const {
    std::call_once(cache_->dual_once, [&] {
        cache_->dual = std::make_shared<const LinearCode>(
            from_generators(kernel(rr_.rref)));
    });
    return *cache_->dual;
}

std::optional<int> LinearCode::min_distance(EnumOptions opts) const {
    if (dim() == 0) return std::nullopt;
    if (dim() > opts.cap) throw enumeration_cap_error(dim(), opts.cap);
    std::call_once(cache_->dist_once, [&] {
        cache_->dist = sweep_min_weight(rr_.rref.row_list(), BitVector(n_),
                                        /*skip_zero=*/true, opts.threads);
    });
    return cache_->dist;
}

bool LinearCode::is_self_orthogonal() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = i; j < dim(); ++j)
            if (rr_.rref.row(i).dot(rr_.rref.row(j))) return false;
    return true;
}

bool LinearCode::is_doubly_even() const {
    for (int i = 0; i < dim(); ++i) {
        if (rr_.rref.row(i).weight() % 4 != 0) return false;
        for (int j = i + 1; j < dim(); ++j)
            if (rr_.rref.row(i).dot(rr_.rref.row(j))) return false;
    }
    return true;
}

bool LinearCode::contains_all_ones() const {
    return n_ > 0 && contains(BitVector::ones(n_));
}

bool LinearCode::is_self_dual() const {
    return 2 * dim() == n_ && is_self_orthogonal();
}

bool LinearCode::is_semi_self_dual() const {
    return is_self_orthogonal() && contains_all_ones() && n_ - 2 * dim() == 2;
}

LinearCode LinearCode::extended_by(const BitVector& v) const {
    BitMatrix m = rr_.rref;
    m.append_row(v);
    return from_generators(m);
}

LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("sum_codes: length mismatch");
    BitMatrix m = a.generator();
    for (int i = 0; i < b.dim(); ++i) m.append_row(b.generator().row(i));
    return LinearCode::from_generators(m);
}

LinearCode intersection(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("intersection: length mismatch");
    return sum_codes(a.dual(), b.dual()).dual();
}

LinearCode block_sum(const LinearCode& a, const LinearCode& b) {
    int n = a.length() + b.length();
    BitMatrix m(a.dim() + b.dim(), n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.length(); ++j)
            if (a.generator().row(i).get(j)) m.row(i).set(j, true);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.length(); ++j)
            if (b.generator().row(i).get(j)) m.row(a.dim() + i).set(a.length() + j, true);
    return LinearCode::from_generators(m);
}

namespace {

// single chunk of a parallel sweep
int chunk_min_weight(const std::vector<BitVector>& rows, const BitVector& offset,
                     std::uint64_t begin, std::uint64_t end, bool skip_zero) {
    int best = offset.length() + 1;
    sweep_range(rows, offset, begin, end, [&](const BitVector& w, std::uint64_t i) {
        if (skip_zero && i == 0) return;
        best = std::min(best, w.weight());
    });
    return best;
}

}  // namespace

int sweep_min_weight(const std::vector<BitVector>& rows, const BitVector& offset,
                     bool skip_zero, int threads) {
    std::uint64_t total = std::uint64_t{1} << rows.size();
    threads = std::max(1, threads);
    if (threads == 1 || total < 1024) {
        return chunk_min_weight(rows, offset, 0, total, skip_zero);
    }
    std::uint64_t nchunks = std::min<std::uint64_t>(threads, total);
    std::vector<int> results(nchunks);
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t b = total / nchunks * c;
        std::uint64_t e = (c + 1 == nchunks) ? total : total / nchunks * (c + 1);
        pool.emplace_back([&, b, e, c] {
            results[c] = chunk_min_weight(rows, offset, b, e, skip_zero);
        });
    }
    for (auto& t : pool) t.join();
    return *std::min_element(results.begin(), results.end());
}

std::vector<std::uint64_t> sweep_weight_histogram(const std::vector<BitVector>& rows,
                                                  const BitVector& offset, int threads) {
    int n = offset.length();
    std::uint64_t total = std::uint64_t{1} << rows.size();
    threads = std::max(1, threads);
    std::uint64_t nchunks = (threads == 1 || total < 1024)
                                ? 1
                                : std::min<std::uint64_t>(threads, total);
    std::vector<std::vector<std::uint64_t>> parts(
        nchunks, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        std::uint64_t b = total / nchunks * c;
        std::uint64_t e = (c + 1 == nchunks) ? total : total / nchunks * (c + 1);
        auto body = [&, b, e, c] {
            auto& h = parts[c];
            sweep_range(rows, offset, b, e,
                        [&](const BitVector& w, std::uint64_t) { ++h[w.weight()]; });
        };
        if (nchunks == 1)
            body();
        else
            pool.emplace_back(body);
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t c = 1; c < nchunks; ++c)
        for (int w = 0; w <= n; ++w) parts[0][w] += parts[c][w];
    return parts[0];
}

}  // namespace ssd
