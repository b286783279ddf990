#include "cbkap/protocol.hpp"

namespace cbkap {

namespace {

constexpr int kMaxResampleTries = 100;

BraidWord single_letter(std::size_t i) {
    return BraidWord{{{static_cast<std::uint16_t>(i), +1}}};
}

Matrix random_invertible(Rng& rng, const Field& f, std::size_t n) {
    for (int tries = 0; tries < kMaxResampleTries; ++tries) {
        Matrix m(f, n, n);
        for (FieldElement& e : m.entries()) e = rng.element(f);
        if (is_invertible(m)) return m;
    }
    throw SetupError("could not sample an invertible matrix");
}

} // namespace

void ParamsConfig::validate() const {
    const std::size_t floor = test_mode ? 4 : 8;
    if (n < floor || n % 2 != 0) {
        throw UsageError("n must be an even integer >= " + std::to_string(floor));
    }
    if (n - 1 > 0xffff) throw UsageError("n too large for the wire format");
    Field check(p); // throws unless p is a valid prime modulus
    if (word_len_keys < 1) throw UsageError("wordLenKeys must be >= 1");
    if (resolved_deg_m() < 2) throw UsageError("degM must be >= 2");
    if (beta_len < 2) throw UsageError("betaLen must be >= 2");
}

std::pair<std::size_t, std::size_t> a_index_range(std::size_t n) {
    return {1, (n - 2) / 2};
}

std::pair<std::size_t, std::size_t> b_index_range(std::size_t n) {
    return {n / 2 + 1, n - 1};
}

BraidWord random_pure_word(Rng& rng, std::size_t lo, std::size_t hi, std::size_t base_len,
                           std::size_t n) {
    BraidWord w;
    for (std::size_t i = 0; i < base_len; ++i) {
        const auto idx = static_cast<std::uint16_t>(lo + rng.below(hi - lo + 1));
        w.letters.push_back({idx, static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
    }
    // Close the permutation: appending letter i swaps positions i, i+1 of the
    // running one-line notation, so bubble-sorting it back to 1..n yields an
    // identity total permutation. The running permutation only moves points
    // in [lo, hi+1], so swaps at indices [lo, hi] suffice.
    std::vector<std::uint16_t> arr = w.total_permutation(n).images_one_based();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = lo; i <= hi; ++i) {
            if (arr[i - 1] > arr[i]) {
                std::swap(arr[i - 1], arr[i]);
                w.letters.push_back({static_cast<std::uint16_t>(i), +1});
                changed = true;
            }
        }
    }
    return w;
}

PublicParams ttp_setup(const ParamsConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.n;
    const Field f(cfg.p);
    Rng rng(cfg.seed);

    // tau_1..tau_n: n values rather than the classical n-1, because B's
    // permutations can map a variable index to n and every evaluation must
    // stay defined.
    std::vector<FieldElement> tau_values(n);
    for (FieldElement& v : tau_values) v = rng.nonzero_element(f);
    TauVector tau(f, std::move(tau_values));

    const auto [a_lo, a_hi] = a_index_range(n);
    const auto [b_lo, b_hi] = b_index_range(n);

    // Default generator sets: single letters plus their squares. Squares are
    // pure words, so B always publishes at least one identity-permutation
    // generator alongside beta.
    std::vector<BraidWord> a_gens;
    std::vector<BraidWord> b_gens;
    for (std::size_t i = a_lo; i <= a_hi; ++i) a_gens.push_back(single_letter(i));
    for (std::size_t i = a_lo; i <= a_hi; ++i) a_gens.push_back(single_letter(i).append(single_letter(i)));
    for (std::size_t i = b_lo; i <= b_hi; ++i) b_gens.push_back(single_letter(i));
    for (std::size_t i = b_lo; i <= b_hi; ++i) b_gens.push_back(single_letter(i).append(single_letter(i)));

    // beta: random pure B-word; resample if its image happens to be the
    // identity, which would degrade m to a scalar.
    const Matrix ident = Matrix::identity(f, n);
    BraidWord beta = random_pure_word(rng, b_lo, b_hi, cfg.beta_len, n);
    for (int tries = 0; tries < kMaxResampleTries && pi_of_word(beta, tau, Permutation::identity(n)) == ident; ++tries) {
        beta = random_pure_word(rng, b_lo, b_hi, cfg.beta_len, n);
    }
    b_gens.push_back(beta);

    const std::size_t deg_m = cfg.resolved_deg_m();
    Matrix m(f, n, n);
    if (cfg.m_mode == MMode::defended) {
        const Matrix pi_beta = pi_of_word(beta, tau, Permutation::identity(n));
        int tries = 0;
        for (;; ++tries) {
            if (tries == kMaxResampleTries) throw SetupError("could not build an invertible defense matrix");
            std::vector<FieldElement> coeffs(deg_m);
            for (FieldElement& c : coeffs) c = rng.element(f);
            m = matrix_polynomial(pi_beta, coeffs);
            if (is_invertible(m)) break;
        }
    } else {
        m = random_invertible(rng, f, n);
    }

    return PublicParams{n,     f,      cfg.m_mode, deg_m, cfg.word_len_keys,
                        tau,   a_gens, b_gens,     beta,  m};
}

PrivateKey keygen(const PublicParams& params, Side side, std::uint64_t seed) {
    Rng rng(seed);
    const Field& f = params.field;

    std::vector<FieldElement> coeffs(params.deg_m);
    Matrix n_matrix(f, params.n, params.n);
    int tries = 0;
    for (;; ++tries) {
        if (tries == kMaxResampleTries) throw SetupError("could not sample an invertible key matrix");
        for (FieldElement& c : coeffs) c = rng.element(f);
        n_matrix = matrix_polynomial(params.m, coeffs);
        if (is_invertible(n_matrix)) break;
    }

    const std::vector<BraidWord>& gens =
        side == Side::alice ? params.a_generators : params.b_generators;
    BraidWord word;
    for (std::size_t i = 0; i < params.word_len_keys; ++i) {
        const BraidWord& g = gens[rng.below(gens.size())];
        word.append(rng.coin() ? g.inverse() : g);
    }

    return PrivateKey{side, std::move(n_matrix), std::move(coeffs), std::move(word)};
}

PublicKey public_key(const PublicParams& params, const PrivateKey& sk) {
    EState s{sk.n_matrix, Permutation::identity(params.n)};
    return PublicKey{e_mul_word(std::move(s), sk.word, params.tau)};
}

SharedSecret shared_secret(const PublicParams& params, const PrivateKey& mine,
                           const PublicKey& theirs) {
    // (n, e) . p: left-multiply the N-part of the peer's public key, then
    // fold our own braid word.
    EState s{mine.n_matrix * theirs.state.matrix, theirs.state.perm};
    return SharedSecret{e_mul_word(std::move(s), mine.word, params.tau)};
}

} // namespace cbkap
