#include "ssd/bitmatrix.hpp"

#include <stdexcept>

namespace ssd {

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative shape");
    r_.assign(rows, BitVector(cols));
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.r_[i].set(i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    if (!rows.empty()) m.cols_ = rows.front().length();
    for (const auto& r : rows)
        if (r.length() != m.cols_)
            throw std::invalid_argument("BitMatrix: ragged rows");
    m.r_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> v;
    v.reserve(rows.size());
    for (auto s : rows) v.push_back(BitVector::from_string(s));
    return from_rows(std::move(v));
}

void BitMatrix::append_row(BitVector v) {
    if (r_.empty() && cols_ == 0) cols_ = v.length();
    if (v.length() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
    r_.push_back(std::move(v));
}

ReduceResult reduce(const BitMatrix& m) {
    ReduceResult out;
    std::vector<BitVector> rows = m.row_list();
    int nr = static_cast<int>(rows.size());
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < nr; ++col) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (rows[i].get(col)) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int i = 0; i < nr; ++i)
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        out.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    out.rref = BitMatrix::from_rows(std::move(rows));
    if (out.rref.cols() == 0) {
        // preserve the column count even when every row was zero
        out.rref = BitMatrix(0, m.cols());
    }
    out.rank = rank;
    return out;
}

BitMatrix kernel(const BitMatrix& m) {
    ReduceResult rr = reduce(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        BitVector v(n);
        v.set(col, true);
        for (int i = 0; i < rr.rank; ++i)
            if (rr.rref.row(i).get(col)) v.set(rr.pivots[i], true);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return BitMatrix(0, n);
    return reduce(BitMatrix::from_rows(std::move(basis))).rref;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.row(i).get(j)) t.row(j).set(i, true);
    return t;
}

BitVector reduce_against(const ReduceResult& rr, BitVector v) {
    if (v.length() != rr.rref.cols())
        throw std::invalid_argument("reduce_against: length mismatch");
    for (int i = 0; i < rr.rank; ++i)
        if (v.get(rr.pivots[i])) v ^= rr.rref.row(i);
    return v;
}

bool member(const ReduceResult& rr, const BitVector& v) {
    return reduce_against(rr, v).is_zero();
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& target) {
    if (target.length() != m.cols())
        throw std::invalid_argument("solve: length mismatch");
    // eliminate while tracking each working row as a combination of inputs
    int nr = m.rows();
    std::vector<BitVector> rows = m.row_list();
    std::vector<BitVector> comb;
    comb.reserve(nr);
    for (int i = 0; i < nr; ++i) comb.push_back(BitVector::unit(nr, i));

    BitVector t = target;
    BitVector tc(nr);
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < nr; ++col) {
        int piv = -1;
        for (int i = rank; i < nr; ++i)
            if (rows[i].get(col)) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        std::swap(comb[rank], comb[piv]);
        for (int i = 0; i < nr; ++i)
            if (i != rank && rows[i].get(col)) {
                rows[i] ^= rows[rank];
                comb[i] ^= comb[rank];
            }
        if (t.get(col)) {
            t ^= rows[rank];
            tc ^= comb[rank];
        }
        ++rank;
    }
    if (!t.is_zero()) return std::nullopt;
    return tc;
}

}  // namespace ssd
