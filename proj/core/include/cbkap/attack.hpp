#pragma once

#include <optional>
#include <vector>

#include "cbkap/protocol.hpp"

namespace cbkap {

// Attacker-made element (alpha, e) of A: a word over Alice's strand
// alphabet whose total permutation is the identity.
struct SpuriousElement {
    BraidWord word;
    bool operator==(const SpuriousElement&) const = default;
};

// One linear constraint pair: the unknown X must satisfy X*y = yPrime*X.
struct AttackEquation {
    Matrix y;       // Pi(alpha)
    Matrix y_prime; // P * Pi(^g alpha) * P^{-1}, (P, g) = Bob's public key
};

struct AttackReport {
    std::size_t solution_dim = 0;
    std::vector<Matrix> basis;
    bool succeeded = false;
    std::optional<FieldElement> scalar_match; // lambda with basis[0] = lambda * n_b
    std::size_t defense_floor = 0;            // min_poly_degree(params.m)
};

// `count` pairwise-distinct pure words over A's alphabet.
std::vector<SpuriousElement> gen_spurious(const PublicParams& params, std::size_t count,
                                          std::uint64_t seed);

// Builds one equation per spurious element from public data only.
std::vector<AttackEquation> assemble_equations(const PublicParams& params, const PublicKey& pub_b,
                                               const std::vector<SpuriousElement>& spurious);

// Solves the stacked homogeneous system X*y_i - y'_i*X = 0 over the n^2
// unknown entries of X; returns a canonical kernel basis reshaped to
// matrices.
std::vector<Matrix> recover_space(const std::vector<AttackEquation>& equations, std::size_t n);

// Success means a 1-dimensional solution space generated by an invertible
// matrix; with ground truth supplied the generator must additionally be a
// scalar multiple of the true n_b.
AttackReport attack_report(const PublicParams& params, const std::vector<Matrix>& basis,
                           const PrivateKey* ground_truth);

// Checks the defense directly: n_b * sum_l w_l m^l satisfies every equation
// for 20 random coefficient vectors w.
bool verify_defense_family(const PublicParams& params, const PublicKey& pub_b,
                           const std::vector<AttackEquation>& equations,
                           const PrivateKey& ground_truth, std::uint64_t seed = 0);

// Whether target lies in the linear span of the basis matrices.
bool in_span(const std::vector<Matrix>& basis, const Matrix& target);

} // namespace cbkap
