#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <kunzkit/errors.hpp>

namespace kunzkit {

// Arbitrary precision throughout: Bareiss pivots and kernel numerators grow
// far beyond 64 bits even on small inputs, and a silently wrong rank corrupts
// every dimension computation downstream.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rat>;

// Dense row-major integer matrix with fixed column labels.  Labels default to
// 1..cols, matching hyperplane matrices over coordinates x_1..x_{m-1};
// presentation matrices relabel columns by poset atoms.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<int> labels);

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols,
                               std::vector<int> labels);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<int>& labels() const { return labels_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    void append_row(const IntVector& v);

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> labels_;
    std::vector<Int> data_;
};

// Rank over the rationals, computed fraction-free (Bareiss) with the first
// nonzero entry in column order as pivot, so intermediate values stay integral
// and the elimination is reproducible.
std::size_t rank(const IntMatrix& M);

// True iff v is a rational linear combination of the rows of M.
// Throws DimensionMismatch when v's length differs from cols(M).
bool rowspan_contains(const IntMatrix& M, const IntVector& v);

// Integral basis of the rational null space of M.  Each vector is primitive
// (gcd of entries 1, positive entry at its free column) and the list order is
// determined by the free columns of the deterministic echelon form.
std::vector<IntVector> kernel_basis(const IntMatrix& M);

}  // namespace kunzkit
