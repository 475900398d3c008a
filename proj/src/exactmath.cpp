#include <kunzkit/exactmath.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace kunzkit {

namespace {

std::vector<int> default_labels(std::size_t cols) {
    std::vector<int> labels(cols);
    for (std::size_t c = 0; c < cols; ++c) labels[c] = static_cast<int>(c) + 1;
    return labels;
}

void check_labels(const std::vector<int>& labels, std::size_t cols) {
    if (labels.size() != cols)
        throw DimensionMismatch("matrix has " + std::to_string(cols) + " columns but " +
                                std::to_string(labels.size()) + " labels");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw DimensionMismatch("duplicate column label " + std::to_string(labels[i]));
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), labels_(default_labels(cols)), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<int> labels)
    : rows_(rows), cols_(cols), labels_(std::move(labels)), data_(rows * cols) {
    check_labels(labels_, cols_);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    return from_rows(rows, cols, default_labels(cols));
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols,
                               std::vector<int> labels) {
    IntMatrix M(rows.size(), cols, std::move(labels));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row " + std::to_string(r) + " has " +
                                    std::to_string(rows[r].size()) + " entries, expected " +
                                    std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = rows[r][c];
    }
    return M;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i) M.at(i, i) = 1;
    return M;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void IntMatrix::append_row(const IntVector& v) {
    if (v.size() != cols_)
        throw DimensionMismatch("appended row has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(cols_));
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

namespace {

// Fraction-free elimination (Bareiss).  Every intermediate entry is a minor of
// the input matrix, so the division by the previous pivot is exact and entries
// stay integral instead of growing as doubly-exponential fractions.
std::size_t bareiss_rank(std::vector<IntVector> A, std::size_t cols) {
    const std::size_t rows = A.size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (A[i][c] != 0) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r) std::swap(A[piv], A[r]);
        const Int pivot = A[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                A[i][j] = (A[i][j] * pivot - A[i][c] * A[r][j]) / prev;
            A[i][c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

std::vector<IntVector> matrix_rows(const IntMatrix& M) {
    std::vector<IntVector> rows;
    rows.reserve(M.rows());
    for (std::size_t r = 0; r < M.rows(); ++r) rows.push_back(M.row(r));
    return rows;
}

}  // namespace

std::size_t rank(const IntMatrix& M) {
    return bareiss_rank(matrix_rows(M), M.cols());
}

bool rowspan_contains(const IntMatrix& M, const IntVector& v) {
    if (v.size() != M.cols())
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                " tested against rowspan of a matrix with " +
                                std::to_string(M.cols()) + " columns");
    auto rows = matrix_rows(M);
    const std::size_t base = bareiss_rank(rows, M.cols());
    rows.push_back(v);
    return bareiss_rank(std::move(rows), M.cols()) == base;
}

std::vector<IntVector> kernel_basis(const IntMatrix& M) {
    const std::size_t rows = M.rows(), cols = M.cols();

    // Exact rational RREF with first-nonzero pivoting; determinism of the
    // echelon form fixes the basis order and signs.
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) A[r][c] = Rat(M.at(r, c));

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (A[i][c] != 0) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r) std::swap(A[piv], A[r]);
        const Rat inv = A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const Rat f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // Free coordinate f set to 1, other free coordinates 0; pivot
        // coordinates read off the reduced rows.
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (std::size_t t = 0; t < pivot_col.size(); ++t) x[pivot_col[t]] = -A[t][f];

        Int scale = 1;
        for (const Rat& q : x) scale = boost::multiprecision::lcm(scale, denominator(q));
        IntVector v(cols);
        Int g = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            v[c] = numerator(x[c]) * (scale / denominator(x[c]));
            g = boost::multiprecision::gcd(g, v[c]);
        }
        if (g > 1)
            for (Int& e : v) e /= g;
        basis.push_back(std::move(v));  // v[f] = scale/g > 0: sign convention
    }
    return basis;
}

}  // namespace kunzkit
