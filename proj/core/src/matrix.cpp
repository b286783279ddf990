#include "cbkap/matrix.hpp"

#include <utility>

namespace cbkap {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw UsageError("matrices from different field contexts");
}

// In-place row reduction to RREF; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        }
        const FieldElement inv = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(inv, m.at(row, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const FieldElement factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(row, j)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
    const Field& f = a.field();
    const std::uint64_t p = f.p();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) = static_cast<FieldElement>(
                    (out.at(i, j) + aik * b.at(k, j)) % p);
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix sum dimension mismatch");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a.field().add(a.entries()[i], b.entries()[i]);
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix difference dimension mismatch");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a.field().sub(a.entries()[i], b.entries()[i]);
    }
    return out;
}

Matrix scale(FieldElement c, const Matrix& a) {
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a.field().mul(c, a.entries()[i]);
    }
    return out;
}

Matrix mat_inv(const Matrix& a) {
    if (!a.square()) throw UsageError("only square matrices can be inverted");
    const Field& f = a.field();
    const std::size_t n = a.rows();
    // Augmented [a | I], reduce, read inverse off the right half.
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrixError();
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    }
    return out;
}

bool is_invertible(const Matrix& a) {
    return a.square() && rank(a) == a.rows();
}

std::size_t rank(const Matrix& a) {
    Matrix work = a;
    return rref(work).size();
}

std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& a) {
    const Field& f = a.field();
    Matrix work = a;
    const std::vector<std::size_t> pivots = rref(work);

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = f.neg(work.at(r, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix mat_pow(const Matrix& a, std::uint64_t e) {
    if (!a.square()) throw UsageError("matrix power requires a square matrix");
    Matrix acc = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    while (e != 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

std::size_t min_poly_degree(const Matrix& a) {
    if (!a.square()) throw UsageError("minimal polynomial requires a square matrix");
    const Field& f = a.field();
    const std::size_t n = a.rows();
    const std::size_t dim = n * n;

    // Incrementally row-reduce vec(a^k) against the span of lower powers.
    std::vector<std::vector<FieldElement>> echelon; // normalized rows
    std::vector<std::size_t> leads;
    Matrix power = Matrix::identity(f, n);
    for (std::size_t k = 0;; ++k) {
        std::vector<FieldElement> v(power.entries().begin(), power.entries().end());
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const FieldElement c = v[leads[r]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) v[j] = f.sub(v[j], f.mul(c, echelon[r][j]));
        }
        std::size_t lead = dim;
        for (std::size_t j = 0; j < dim; ++j) {
            if (v[j] != 0) { lead = j; break; }
        }
        if (lead == dim) return k; // a^k dependent on lower powers; k >= 1 since I != 0
        const FieldElement inv = f.inv(v[lead]);
        for (std::size_t j = 0; j < dim; ++j) v[j] = f.mul(inv, v[j]);
        echelon.push_back(std::move(v));
        leads.push_back(lead);
        power = power * a;
    }
}

Matrix matrix_polynomial(const Matrix& a, std::span<const FieldElement> coeffs) {
    if (!a.square()) throw UsageError("matrix polynomial requires a square matrix");
    Matrix acc(a.field(), a.rows(), a.cols());
    Matrix power = Matrix::identity(a.field(), a.rows());
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
        if (l > 0) power = power * a;
        if (coeffs[l] != 0) acc = acc + scale(coeffs[l], power);
    }
    return acc;
}

} // namespace cbkap
