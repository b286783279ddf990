#include "cbkap/field.hpp"

namespace cbkap {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

} // namespace

Field::Field(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw UsageError("field modulus must be a prime in [2, 2^31)");
    }
    std::size_t bits = 0;
    for (std::uint32_t v = p; v != 0; v >>= 1) ++bits;
    width_ = (bits + 7) / 8;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    std::uint64_t base = a % p_;
    std::uint64_t acc = 1 % p_;
    while (e != 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<FieldElement>(acc);
}

FieldElement Field::inv(FieldElement a) const {
    if (a % p_ == 0) throw UsageError("division by zero in GF(p)");
    return pow(a, p_ - 2);
}

} // namespace cbkap
