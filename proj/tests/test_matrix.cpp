#include <doctest.h>

#include "helpers.hpp"

using namespace cbkap;
using namespace cbkap::testing;

namespace {

Matrix from_rows(const Field& f, std::vector<std::vector<FieldElement>> rows) {
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

} // namespace

TEST_CASE("product examples") {
    const Field f5(5);
    const Matrix a = from_rows(f5, {{1, 2}, {3, 4}});
    const Matrix swap = from_rows(f5, {{0, 1}, {1, 0}});
    CHECK(a * swap == from_rows(f5, {{2, 1}, {4, 3}}));

    const Field f7(7);
    Rng rng(1);
    const Matrix b = random_matrix(rng, f7, 4, 4);
    CHECK(Matrix::identity(f7, 4) * b == b);
    CHECK(b * Matrix::identity(f7, 4) == b);
}

TEST_CASE("product dimension and context checks") {
    const Field f5(5), f7(7);
    CHECK_THROWS_AS(Matrix(f5, 2, 2) * Matrix(f5, 3, 3), UsageError);
    CHECK_THROWS_AS(Matrix(f5, 2, 2) * Matrix(f7, 2, 2), UsageError);
}

TEST_CASE("inverse") {
    const Field f7(7);
    const Matrix ident = Matrix::identity(f7, 4);
    CHECK(mat_inv(ident) == ident);

    Matrix diag = ident;
    diag.at(0, 0) = 3;
    Matrix expected = ident;
    expected.at(0, 0) = 5; // 3*5 = 15 = 1 mod 7
    CHECK(mat_inv(diag) == expected);

    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        const Matrix a = random_invertible_matrix(rng, f7, 4);
        CHECK(a * mat_inv(a) == ident);
        CHECK(mat_inv(a) * a == ident);
        CHECK(mat_inv(mat_inv(a)) == a);
    }
}

TEST_CASE("singularity agrees with the cofactor determinant oracle") {
    Rng rng(3);
    const Field f5(5);
    int singular_seen = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng.below(4);
        const Matrix a = random_matrix(rng, f5, n, n);
        const bool det_zero = cofactor_det(a) == 0;
        if (det_zero) {
            ++singular_seen;
            CHECK_THROWS_AS(mat_inv(a), SingularMatrixError);
            CHECK_FALSE(is_invertible(a));
        } else {
            CHECK(a * mat_inv(a) == Matrix::identity(f5, n));
            CHECK(is_invertible(a));
        }
    }
    CHECK(singular_seen > 0); // over GF(5) small matrices are often singular
}

TEST_CASE("kernel examples") {
    const Field f5(5);
    SUBCASE("rank-1 2x2") {
        const Matrix a = from_rows(f5, {{1, 2}, {2, 4}});
        const auto basis = kernel_basis(a);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<FieldElement>{3, 1}); // 3 + 2*1 = 5 = 0
    }
    SUBCASE("zero matrix") {
        CHECK(kernel_basis(Matrix(f5, 2, 2)).size() == 2);
    }
    SUBCASE("identity") {
        CHECK(kernel_basis(Matrix::identity(f5, 3)).empty());
    }
}

TEST_CASE("kernel matches brute-force enumeration over GF(5)") {
    const Field f5(5);
    Rng rng(4);
    for (int i = 0; i < 60; ++i) {
        const std::size_t rows = 1 + rng.below(4);
        const std::size_t cols = 1 + rng.below(4);
        const Matrix a = random_matrix(rng, f5, rows, cols);
        const auto basis = kernel_basis(a);
        CHECK(basis.size() == cols - rank(a));
        for (const auto& v : basis) CHECK(matvec_is_zero(a, v));
        // brute dimension: |kernel| = 5^dim
        std::size_t count = brute_kernel(a).size();
        std::size_t dim = 0;
        while (count > 1) {
            count /= 5;
            ++dim;
        }
        CHECK(basis.size() == dim);
        // independence of the returned vectors
        if (!basis.empty()) {
            Matrix stacked(f5, basis.size(), cols);
            for (std::size_t r = 0; r < basis.size(); ++r) {
                for (std::size_t c = 0; c < cols; ++c) stacked.at(r, c) = basis[r][c];
            }
            CHECK(rank(stacked) == basis.size());
        }
    }
}

TEST_CASE("kernel output is deterministic") {
    Rng rng(5);
    const Field f5(5);
    const Matrix a = random_matrix(rng, f5, 3, 4);
    CHECK(kernel_basis(a) == kernel_basis(a));
}

TEST_CASE("matrix powers") {
    const Field f7(7);
    Rng rng(6);
    const Matrix a = random_matrix(rng, f7, 4, 4);
    CHECK(mat_pow(a, 0) == Matrix::identity(f7, 4));
    CHECK(mat_pow(a, 1) == a);
    CHECK(mat_pow(a, 3) == a * a * a);
    for (int i = 0; i < 10; ++i) {
        const std::uint64_t e1 = rng.below(8), e2 = rng.below(8);
        CHECK(mat_pow(a, e1 + e2) == mat_pow(a, e1) * mat_pow(a, e2));
    }
}

TEST_CASE("minimal polynomial degree") {
    const Field f7(7);
    CHECK(min_poly_degree(Matrix::identity(f7, 4)) == 1);
    CHECK(min_poly_degree(Matrix(f7, 4, 4)) == 1); // zero matrix: mu(x) = x

    Matrix diag = Matrix::identity(f7, 2);
    diag.at(1, 1) = 2;
    CHECK(min_poly_degree(diag) == 2); // a^2 = 3a - 2I

    // invariant under conjugation
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const Matrix a = random_matrix(rng, f7, 4, 4);
        const Matrix s = random_invertible_matrix(rng, f7, 4);
        CHECK(min_poly_degree(a) == min_poly_degree(s * a * mat_inv(s)));
        CHECK(min_poly_degree(a) >= 1);
        CHECK(min_poly_degree(a) <= 4);
    }
}

TEST_CASE("matrix polynomial evaluation") {
    const Field f7(7);
    Rng rng(8);
    const Matrix a = random_matrix(rng, f7, 3, 3);
    const std::vector<FieldElement> coeffs{2, 0, 5};
    const Matrix expected = scale(2, Matrix::identity(f7, 3)) + scale(5, a * a);
    CHECK(matrix_polynomial(a, coeffs) == expected);
    CHECK(matrix_polynomial(a, std::vector<FieldElement>{}) == Matrix(f7, 3, 3));
}
