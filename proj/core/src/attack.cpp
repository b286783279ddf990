#include "cbkap/attack.hpp"

#include <algorithm>

namespace cbkap {

namespace {

constexpr std::size_t kSpuriousBaseLen = 12;

bool satisfies_all(const Matrix& candidate, const std::vector<AttackEquation>& equations) {
    return std::all_of(equations.begin(), equations.end(), [&](const AttackEquation& eq) {
        return candidate * eq.y == eq.y_prime * candidate;
    });
}

} // namespace

std::vector<SpuriousElement> gen_spurious(const PublicParams& params, std::size_t count,
                                          std::uint64_t seed) {
    Rng rng(seed);
    const auto [lo, hi] = a_index_range(params.n);
    std::vector<SpuriousElement> out;
    out.reserve(count);
    while (out.size() < count) {
        SpuriousElement e{random_pure_word(rng, lo, hi, kSpuriousBaseLen, params.n)};
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    return out;
}

std::vector<AttackEquation> assemble_equations(const PublicParams& params, const PublicKey& pub_b,
                                               const std::vector<SpuriousElement>& spurious) {
    const Matrix& p_mat = pub_b.state.matrix;
    const Permutation& g = pub_b.state.perm;
    const Matrix p_inv = mat_inv(p_mat);
    const Permutation ident = Permutation::identity(params.n);

    std::vector<AttackEquation> out;
    out.reserve(spurious.size());
    for (const SpuriousElement& s : spurious) {
        Matrix y = pi_of_word(s.word, params.tau, ident);
        Matrix y_prime = p_mat * pi_of_word(s.word, params.tau, g) * p_inv;
        out.push_back({std::move(y), std::move(y_prime)});
    }
    return out;
}

std::vector<Matrix> recover_space(const std::vector<AttackEquation>& equations, std::size_t n) {
    if (equations.empty()) throw UsageError("recover_space needs at least one equation");
    const Field& f = equations.front().y.field();
    const std::size_t unknowns = n * n;

    // Unknown X[r][k] gets column index r*n+k. Equation (r,c) of
    // X*y - y'*X = 0 reads: sum_k X[r][k]*y[k][c] - sum_k y'[r][k]*X[k][c] = 0.
    Matrix system(f, unknowns * equations.size(), unknowns);
    std::size_t row = 0;
    for (const AttackEquation& eq : equations) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c, ++row) {
                for (std::size_t k = 0; k < n; ++k) {
                    FieldElement& coef_rk = system.at(row, r * n + k);
                    coef_rk = f.add(coef_rk, eq.y.at(k, c));
                    FieldElement& coef_kc = system.at(row, k * n + c);
                    coef_kc = f.sub(coef_kc, eq.y_prime.at(r, k));
                }
            }
        }
    }

    std::vector<Matrix> basis;
    for (const std::vector<FieldElement>& v : kernel_basis(system)) {
        Matrix m(f, n, n);
        std::copy(v.begin(), v.end(), m.entries().begin());
        basis.push_back(std::move(m));
    }
    return basis;
}

AttackReport attack_report(const PublicParams& params, const std::vector<Matrix>& basis,
                           const PrivateKey* ground_truth) {
    AttackReport report;
    report.solution_dim = basis.size();
    report.basis = basis;
    report.defense_floor = min_poly_degree(params.m);
    report.succeeded = basis.size() == 1 && is_invertible(basis.front());

    if (report.succeeded && ground_truth != nullptr) {
        const Field& f = params.field;
        const Matrix& truth = ground_truth->n_matrix;
        const Matrix& candidate = basis.front();
        // lambda from any nonzero entry of n_b, then a global check.
        std::optional<FieldElement> lambda;
        for (std::size_t i = 0; i < truth.entries().size() && !lambda; ++i) {
            if (truth.entries()[i] != 0) {
                lambda = f.mul(candidate.entries()[i], f.inv(truth.entries()[i]));
            }
        }
        if (lambda && candidate == scale(*lambda, truth)) {
            report.scalar_match = lambda;
        } else {
            report.succeeded = false;
        }
    }
    return report;
}

bool verify_defense_family(const PublicParams& params, const PublicKey& /*pub_b*/,
                           const std::vector<AttackEquation>& equations,
                           const PrivateKey& ground_truth, std::uint64_t seed) {
    Rng rng(seed);
    const Field& f = params.field;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FieldElement> w(params.deg_m);
        for (FieldElement& c : w) c = rng.element(f);
        const Matrix candidate = ground_truth.n_matrix * matrix_polynomial(params.m, w);
        if (!satisfies_all(candidate, equations)) return false;
    }
    return true;
}

bool in_span(const std::vector<Matrix>& basis, const Matrix& target) {
    if (basis.empty()) {
        return std::all_of(target.entries().begin(), target.entries().end(),
                           [](FieldElement v) { return v == 0; });
    }
    const Field& f = target.field();
    const std::size_t dim = target.rows() * target.cols();
    Matrix stacked(f, basis.size(), dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::copy(basis[i].entries().begin(), basis[i].entries().end(),
                  stacked.entries().begin() + static_cast<std::ptrdiff_t>(i * dim));
    }
    Matrix augmented(f, basis.size() + 1, dim);
    std::copy(stacked.entries().begin(), stacked.entries().end(), augmented.entries().begin());
    std::copy(target.entries().begin(), target.entries().end(),
              augmented.entries().begin() + static_cast<std::ptrdiff_t>(basis.size() * dim));
    return rank(stacked) == rank(augmented);
}

} // namespace cbkap
