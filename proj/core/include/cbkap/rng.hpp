#pragma once

#include <cstdint>

#include "cbkap/field.hpp"

namespace cbkap {

// Deterministic generator (splitmix64). The whole artifact derives key
// material and experiment data from explicit 64-bit seeds, so the stream
// must be identical on every platform; splitmix64 is fully specified.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection sampling; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return (next() & 1) != 0; }

    FieldElement element(const Field& f) {
        return static_cast<FieldElement>(below(f.p()));
    }

    FieldElement nonzero_element(const Field& f) {
        return static_cast<FieldElement>(below(f.p() - 1) + 1);
    }

private:
    std::uint64_t state_;
};

} // namespace cbkap
