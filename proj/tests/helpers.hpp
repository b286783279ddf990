#pragma once

#include <vector>

#include "cbkap/braid.hpp"
#include "cbkap/rng.hpp"

namespace cbkap::testing {

inline Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (FieldElement& e : m.entries()) e = rng.element(f);
    return m;
}

inline Matrix random_invertible_matrix(Rng& rng, const Field& f, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, f, n, n);
        if (is_invertible(m)) return m;
    }
}

inline BraidWord random_word(Rng& rng, std::size_t lo, std::size_t hi, std::size_t len) {
    BraidWord w;
    for (std::size_t i = 0; i < len; ++i) {
        w.letters.push_back({static_cast<std::uint16_t>(lo + rng.below(hi - lo + 1)),
                             static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
    }
    return w;
}

// Determinant by cofactor expansion, n <= 4. Test oracle for singularity.
inline FieldElement cofactor_det(const Matrix& a) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    if (n == 1) return a.at(0, 0);
    FieldElement det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        Matrix minor(f, n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        const FieldElement term = f.mul(a.at(0, j), cofactor_det(minor));
        det = j % 2 == 0 ? f.add(det, term) : f.sub(det, term);
    }
    return det;
}

// Brute-force kernel: all vectors v over GF(p) with a*v = 0. Only sensible
// for p^cols small.
inline std::vector<std::vector<FieldElement>> brute_kernel(const Matrix& a) {
    const Field& f = a.field();
    const std::size_t cols = a.cols();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cols; ++i) total *= f.p();

    std::vector<std::vector<FieldElement>> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<FieldElement> v(cols);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < cols; ++i) {
            v[i] = static_cast<FieldElement>(c % f.p());
            c /= f.p();
        }
        bool in_kernel = true;
        for (std::size_t r = 0; r < a.rows() && in_kernel; ++r) {
            FieldElement acc = 0;
            for (std::size_t j = 0; j < cols; ++j) acc = f.add(acc, f.mul(a.at(r, j), v[j]));
            in_kernel = acc == 0;
        }
        if (in_kernel) out.push_back(std::move(v));
    }
    return out;
}

inline bool matvec_is_zero(const Matrix& a, const std::vector<FieldElement>& v) {
    const Field& f = a.field();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        FieldElement acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a.at(r, j), v[j]));
        if (acc != 0) return false;
    }
    return true;
}

} // namespace cbkap::testing
