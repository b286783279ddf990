#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cbkap/field.hpp"

namespace cbkap {

// Dense row-major matrix over GF(p). Used both for square protocol data
// (elements of GL(n,F)) and for the rectangular stacked attack systems.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {
        if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be >= 1");
    }

    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    FieldElement at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    FieldElement& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    std::span<const FieldElement> entries() const { return e_; }
    std::span<FieldElement> entries() { return e_; }

    bool operator==(const Matrix&) const = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Scalar multiple c*a.
Matrix scale(FieldElement c, const Matrix& a);

// Inverse of a square matrix; throws SingularMatrixError on singular input.
Matrix mat_inv(const Matrix& a);

bool is_invertible(const Matrix& a);

// Row rank by Gaussian elimination.
std::size_t rank(const Matrix& a);

// Basis of {v : a*v = 0}, canonical: the basis matrix (vectors as columns)
// is in reduced column-echelon form, one vector per free column of the RREF
// of a, ordered by free-column index. Empty result means trivial kernel.
std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& a);

// a^e by square-and-multiply; a^0 = I.
Matrix mat_pow(const Matrix& a, std::uint64_t e);

// Least d >= 1 such that {I, a, ..., a^d} is linearly dependent, i.e. the
// degree of the minimal polynomial of a. Always in [1, n].
std::size_t min_poly_degree(const Matrix& a);

// sum_l coeffs[l] * a^l.
Matrix matrix_polynomial(const Matrix& a, std::span<const FieldElement> coeffs);

} // namespace cbkap
