#pragma once

#include <cstddef>
#include <cstdint>

#include "cbkap/errors.hpp"

namespace cbkap {

// Canonical residue in GF(p). Always in [0, p).
using FieldElement = std::uint32_t;

// Arithmetic context for a prime field GF(p), 2 <= p < 2^31. Elements are
// plain residues; the modulus travels in this context object so several
// field sizes can coexist in one process.
class Field {
public:
    explicit Field(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    FieldElement add(FieldElement a, FieldElement b) const {
        std::uint32_t s = a + b; // p < 2^31, no overflow
        return s >= p_ ? s - p_ : s;
    }

    FieldElement sub(FieldElement a, FieldElement b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    FieldElement mul(FieldElement a, FieldElement b) const {
        return static_cast<FieldElement>(std::uint64_t(a) * b % p_);
    }

    FieldElement neg(FieldElement a) const { return a == 0 ? 0 : p_ - a; }

    // a^e by square-and-multiply.
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    // Multiplicative inverse; throws UsageError on zero.
    FieldElement inv(FieldElement a) const;

    // Canonical residue of an arbitrary signed 64-bit value.
    FieldElement reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<FieldElement>(r);
    }

    // Width of the canonical byte encoding: ceil(bits(p)/8).
    std::size_t byte_width() const { return width_; }

    bool operator==(const Field&) const = default;

private:
    std::uint32_t p_;
    std::size_t width_;
};

} // namespace cbkap
