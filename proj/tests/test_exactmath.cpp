#include <doctest.h>

#include <random>

#include <kunzkit/exactmath.hpp>

#include "fixtures.hpp"

using namespace kunzkit;

namespace {

// Independent oracle: plain Gaussian elimination over exact rationals, no
// shared code with the Bareiss path.
std::size_t naive_rank(const IntMatrix& M) {
    std::vector<std::vector<Rat>> A(M.rows(), std::vector<Rat>(M.cols()));
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) A[r][c] = Rat(M.at(r, c));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < M.cols() && rank < M.rows(); ++c) {
        std::size_t piv = M.rows();
        for (std::size_t i = rank; i < M.rows(); ++i)
            if (A[i][c] != 0) { piv = i; break; }
        if (piv == M.rows()) continue;
        std::swap(A[piv], A[rank]);
        for (std::size_t i = rank + 1; i < M.rows(); ++i) {
            const Rat f = A[i][c] / A[rank][c];
            for (std::size_t j = c; j < M.cols(); ++j) A[i][j] -= f * A[rank][j];
        }
        ++rank;
    }
    return rank;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix M(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = entry(rng);
    return M;
}

IntVector unit(std::size_t len, std::size_t pos) {
    IntVector v(len, 0);
    v[pos] = 1;
    return v;
}

bool in_kernel(const IntMatrix& M, const IntVector& v) {
    for (std::size_t r = 0; r < M.rows(); ++r) {
        Int s = 0;
        for (std::size_t c = 0; c < M.cols(); ++c) s += M.at(r, c) * v[c];
        if (s != 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("exactmath");

TEST_CASE("rank of fixed matrices") {
    CHECK(rank(IntMatrix::identity(3)) == 3);
    CHECK(rank(IntMatrix(2, 4)) == 0);
    CHECK(rank(fixtures::m8_face_matrix()) == 5);
    CHECK(rank(fixtures::m6_face_matrix()) == 3);
}

TEST_CASE("rank is invariant under row scaling and duplication") {
    IntMatrix M = fixtures::m8_face_matrix();
    IntMatrix scaled = M;
    for (std::size_t c = 0; c < M.cols(); ++c) scaled.at(2, c) *= -7;
    scaled.append_row(M.row(0));
    CHECK(rank(scaled) == rank(M));
}

TEST_CASE("rowspan membership") {
    IntMatrix single = IntMatrix::from_rows({unit(3, 0)}, 3);
    CHECK_FALSE(rowspan_contains(single, unit(3, 1)));
    CHECK(rowspan_contains(IntMatrix::identity(2), {Int(1), Int(1)}));

    // a_2 + a_3 = a_5 holds on the face of <6,7,8,9>.
    CHECK(rowspan_contains(fixtures::m6_face_matrix(), {0, 1, 1, 0, -1}));
    CHECK_FALSE(rowspan_contains(fixtures::m6_face_matrix(), unit(5, 1)));

    CHECK_THROWS_AS(rowspan_contains(IntMatrix::identity(2), IntVector{Int(1)}),
                    DimensionMismatch);
}

TEST_CASE("rowspan contains every row, robust to row scaling") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix M = random_matrix(rng, 4, 6);
        for (std::size_t r = 0; r < M.rows(); ++r) CHECK(rowspan_contains(M, M.row(r)));
        IntMatrix scaled = M;
        for (std::size_t c = 0; c < M.cols(); ++c) scaled.at(1, c) *= 5;
        IntVector probe = random_matrix(rng, 1, 6).row(0);
        CHECK(rowspan_contains(M, probe) == rowspan_contains(scaled, probe));
    }
}

TEST_CASE("kernel of fixed matrices") {
    CHECK(kernel_basis(IntMatrix::identity(4)).empty());

    auto k = kernel_basis(IntMatrix::from_rows({{Int(1), Int(-1)}}, 2));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == IntVector{Int(1), Int(1)});

    IntMatrix M = fixtures::m8_face_matrix();
    auto basis = kernel_basis(M);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(in_kernel(M, v));
}

TEST_CASE("kernel basis is primitive and deterministic") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        IntMatrix M = random_matrix(rng, 5, 8);
        auto basis = kernel_basis(M);
        CHECK(basis == kernel_basis(M));
        for (const auto& v : basis) {
            CHECK(in_kernel(M, v));
            Int g = 0;
            for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
            CHECK(g == 1);
        }
        // Basis vectors are independent: stacking them loses no rank.
        if (!basis.empty())
            CHECK(rank(IntMatrix::from_rows(basis, M.cols())) == basis.size());
    }
}

TEST_CASE("agreement with naive rational elimination on random matrices") {
    std::mt19937 rng(20260814);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix M = random_matrix(rng, 8, 8);
        const std::size_t rk = rank(M);
        CHECK(rk == naive_rank(M));
        CHECK(rk + kernel_basis(M).size() == M.cols());
    }
}

TEST_CASE("rank plus kernel size equals column count on rectangular input") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 9);
        IntMatrix M = random_matrix(rng, dim(rng), dim(rng));
        CHECK(rank(M) + kernel_basis(M).size() == M.cols());
    }
}

TEST_SUITE_END();
