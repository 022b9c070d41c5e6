#pragma once

#include "ssd/bitvec.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace ssd {

// Matrix over GF(2), stored as a list of equal-length BitVector rows.
// A 0xN matrix (no rows) is a legal value and represents the zero space.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    int rows() const { return static_cast<int>(r_.size()); }
    int cols() const { return cols_; }
    const BitVector& row(int i) const { return r_.at(i); }
    BitVector& row(int i) { return r_.at(i); }
    const std::vector<BitVector>& row_list() const { return r_; }

    void append_row(BitVector v);

    bool operator==(const BitMatrix&) const = default;

private:
    int cols_ = 0;
    std::vector<BitVector> r_;
};

struct ReduceResult {
    BitMatrix rref;            // zero rows dropped; rows() == rank
    int rank = 0;
    std::vector<int> pivots;   // pivot column of each rref row, strictly increasing
};

// Gauss-Jordan elimination to reduced row echelon form.
ReduceResult reduce(const BitMatrix& m);

// Basis of {v : m v^T = 0}, returned in reduced form. For a 0xN input the
// kernel is the whole space, so the identity basis comes back.
BitMatrix kernel(const BitMatrix& m);

BitMatrix transpose(const BitMatrix& m);

// Residual of v after elimination against an RREF matrix; zero iff v lies in
// the row space. The matrix must already be in reduced form.
BitVector reduce_against(const ReduceResult& rr, BitVector v);

bool member(const ReduceResult& rr, const BitVector& v);

// Coefficients x with x * m = target, expressed in the rows of m as given
// (not of its RREF); nullopt if target is outside the row space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& target);

}  // namespace ssd
