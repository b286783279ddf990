#pragma once

#include <cstdint>
#include <vector>

#include "cbkap/braid.hpp"
#include "cbkap/rng.hpp"

namespace cbkap {

enum class MMode : std::uint8_t { defended = 0, baseline = 1 };
enum class Side : std::uint8_t { alice = 0, bob = 1 };

// TTP configuration. Defaults follow the experiment sizes used throughout
// the test suite; test_mode relaxes the n >= 8 floor to n >= 4.
struct ParamsConfig {
    std::size_t n = 8;
    std::uint32_t p = 251;
    std::size_t word_len_keys = 20; // k and l: letters drawn for each private word
    std::size_t deg_m = 0;          // powers of Pi(beta) summed; 0 means n
    std::size_t beta_len = 16;      // target beta word length before closing
    MMode m_mode = MMode::defended;
    std::uint64_t seed = 0;
    bool test_mode = false;

    std::size_t resolved_deg_m() const { return deg_m == 0 ? n : deg_m; }
    void validate() const; // throws UsageError
};

// Everything the TTP publishes.
struct PublicParams {
    std::size_t n;
    Field field;
    MMode m_mode;
    std::size_t deg_m;
    std::size_t word_len_keys;
    TauVector tau; // length n: tau is extended to cover index n (see ttp_setup)
    std::vector<BraidWord> a_generators; // words over indices 1..(n-2)/2
    std::vector<BraidWord> b_generators; // words over indices n/2+1..n-1
    BraidWord beta;                      // pure word, member of b_generators
    Matrix m;                            // invertible; defended: in F[Pi(beta)]

    bool operator==(const PublicParams&) const = default;
};

struct PrivateKey {
    Side side;
    Matrix n_matrix;                     // invertible polynomial in params.m
    std::vector<FieldElement> n_coeffs;  // the polynomial's coefficients
    BraidWord word;                      // over the owner's strand alphabet

    bool operator==(const PrivateKey&) const = default;
};

struct PublicKey {
    EState state;
    bool operator==(const PublicKey&) const = default;
};

struct SharedSecret {
    EState state;
    bool operator==(const SharedSecret&) const = default;
};

// Strand alphabets: Alice gets the first (n-2)/2 generator indices, Bob the
// last (n-2)/2.
std::pair<std::size_t, std::size_t> a_index_range(std::size_t n); // [lo, hi] inclusive
std::pair<std::size_t, std::size_t> b_index_range(std::size_t n);

// Random word over indices [lo, hi] with identity total permutation: base_len
// random signed letters plus a bubble-sort closing suffix.
BraidWord random_pure_word(Rng& rng, std::size_t lo, std::size_t hi, std::size_t base_len,
                           std::size_t n);

// Generates all public protocol data, deterministically in cfg.seed.
PublicParams ttp_setup(const ParamsConfig& cfg);

PrivateKey keygen(const PublicParams& params, Side side, std::uint64_t seed);

PublicKey public_key(const PublicParams& params, const PrivateKey& sk);

SharedSecret shared_secret(const PublicParams& params, const PrivateKey& mine,
                           const PublicKey& theirs);

} // namespace cbkap
