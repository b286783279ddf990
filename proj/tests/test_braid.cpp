#include <doctest.h>

#include "helpers.hpp"
#include "cbkap/protocol.hpp"

using namespace cbkap;
using namespace cbkap::testing;

namespace {

TauVector tau234(const Field& f7) { return TauVector(f7, {2, 3, 4}); }

Matrix from_rows(const Field& f, std::vector<std::vector<FieldElement>> rows) {
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

} // namespace

TEST_CASE("permutation composition") {
    const auto e = Permutation::identity(3);
    const auto s1 = Permutation::transposition(3, 1);
    const auto s2 = Permutation::transposition(3, 2);
    CHECK(s1.compose(e) == s1);
    CHECK(s1.compose(s1) == e);
    // s1 o s2 is the 3-cycle 1->2->3->1
    CHECK(s1.compose(s2) == Permutation::from_images({2, 3, 1}));
    CHECK_THROWS_AS(s1.compose(Permutation::identity(4)), UsageError);
    CHECK(s1.inverse() == s1);
    CHECK(Permutation::from_images({2, 3, 1}).inverse() == Permutation::from_images({3, 1, 2}));
}

TEST_CASE("permutation text round-trip and validation") {
    const auto g = Permutation::from_images({2, 1, 3});
    CHECK(g.text() == "2 1 3");
    CHECK(Permutation::parse("2 1 3") == g);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), UsageError);
    CHECK_THROWS_AS(Permutation::parse("0 1"), UsageError);
}

TEST_CASE("braid word text form") {
    const BraidWord w = BraidWord::parse("1,2,-3");
    REQUIRE(w.letters.size() == 3);
    CHECK(w.letters[2] == BraidLetter{3, -1});
    CHECK(w.text() == "1,2,-3");
    CHECK(w.inverse().text() == "3,-2,-1");
    CHECK(BraidWord::parse("").letters.empty());
    CHECK_THROWS_AS(BraidWord::parse("1,,2"), UsageError);
    CHECK_THROWS_AS(BraidWord::parse("0"), UsageError);
}

TEST_CASE("generator matrix examples, n=4, p=7, tau=(2,3,4)") {
    const Field f7(7);
    const TauVector tau = tau234(f7);
    const auto e = Permutation::identity(4);

    const Matrix x1 = cb_generator_matrix(1, +1, e, tau);
    CHECK(x1 == from_rows(f7, {{5, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

    const Matrix x1_inv = cb_generator_matrix(1, -1, e, tau);
    CHECK(x1 * x1_inv == Matrix::identity(f7, 4));

    // variable action: with g = s_1, generator 2 picks up tau_{g(2)} = tau_1
    const auto s1 = Permutation::transposition(4, 1);
    const Matrix x2 = cb_generator_matrix(2, +1, s1, tau);
    CHECK(x2 == from_rows(f7, {{1, 0, 0, 0}, {2, 5, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

    CHECK_THROWS_AS(cb_generator_matrix(0, +1, e, tau), UsageError);
    CHECK_THROWS_AS(cb_generator_matrix(4, +1, e, tau), UsageError);
}

TEST_CASE("evaluation demanding tau_n is a distinct error") {
    const Field f7(7);
    const TauVector tau = tau234(f7); // length 3, no tau_4
    // g maps 3 -> 4, so generator 3 evaluates at the missing tau_4
    const auto g = Permutation::transposition(4, 3);
    CHECK_THROWS_AS(cb_generator_matrix(3, +1, g, tau), EvaluationError);
    const EState s{Matrix::identity(f7, 4), g};
    CHECK_THROWS_AS(e_mul_letter(s, BraidLetter{3, +1}, tau), EvaluationError);
}

TEST_CASE("tau values must be nonzero") {
    const Field f7(7);
    CHECK_THROWS_AS(TauVector(f7, {2, 0, 4}), UsageError);
}

TEST_CASE("single E-multiplication step") {
    const Field f7(7);
    const TauVector tau = tau234(f7);
    const EState start{Matrix::identity(f7, 4), Permutation::identity(4)};

    const EState next = e_mul_letter(start, BraidLetter{1, +1}, tau);
    CHECK(next.matrix == cb_generator_matrix(1, +1, Permutation::identity(4), tau));
    CHECK(next.perm == Permutation::transposition(4, 1));
}

TEST_CASE("letter followed by its inverse restores the state") {
    for (std::uint32_t p : {7u, 251u}) {
        for (std::size_t n : {std::size_t{4}, std::size_t{8}}) {
            const Field f(p);
            Rng rng(p + n);
            std::vector<FieldElement> tv(n);
            for (auto& t : tv) t = rng.nonzero_element(f);
            const TauVector tau(f, tv);
            for (int i = 0; i < 50; ++i) {
                // random state: invertible matrix, random permutation via a word
                const EState base{random_invertible_matrix(rng, f, n),
                                  random_word(rng, 1, n - 1, 6).total_permutation(n)};
                const BraidLetter l{static_cast<std::uint16_t>(1 + rng.below(n - 1)),
                                    static_cast<std::int8_t>(rng.coin() ? 1 : -1)};
                CHECK(e_mul_letter(e_mul_letter(base, l, tau), l.inverse(), tau) == base);
            }
        }
    }
}

TEST_CASE("word fold properties") {
    const Field f(251);
    const std::size_t n = 8;
    Rng rng(17);
    std::vector<FieldElement> tv(n);
    for (auto& t : tv) t = rng.nonzero_element(f);
    const TauVector tau(f, tv);
    const EState ident{Matrix::identity(f, n), Permutation::identity(n)};

    CHECK(e_mul_word(ident, BraidWord{}, tau) == ident);

    for (int i = 0; i < 30; ++i) {
        const BraidWord w = random_word(rng, 1, n - 1, 10);
        // formal inverse cancels
        BraidWord round = w;
        round.append(w.inverse());
        CHECK(e_mul_word(ident, round, tau) == ident);
        // fold of a concatenation = composition of folds
        const BraidWord w2 = random_word(rng, 1, n - 1, 7);
        BraidWord cat = w;
        cat.append(w2);
        CHECK(e_mul_word(ident, cat, tau) == e_mul_word(e_mul_word(ident, w, tau), w2, tau));
    }
}

TEST_CASE("left-action law for the variable permutation") {
    // ^{g o h} t_i = t_{g(h(i))}: evaluating at g o h equals permuting by h
    // first, then by g.
    const Field f(251);
    const std::size_t n = 8;
    Rng rng(19);
    std::vector<FieldElement> tv(n);
    for (auto& t : tv) t = rng.nonzero_element(f);
    const TauVector tau(f, tv);
    for (int i = 0; i < 50; ++i) {
        const Permutation g = random_word(rng, 1, n - 1, 6).total_permutation(n);
        const Permutation h = random_word(rng, 1, n - 1, 6).total_permutation(n);
        const std::size_t idx = 1 + rng.below(n - 1);
        const Matrix lhs = cb_generator_matrix(idx, +1, g.compose(h), tau);
        // permute by h, then by g: the variable index travels i -> h(i) -> g(h(i))
        CHECK(lhs.at(idx - 1, idx - 1) == f.neg(tau.at(g.apply(h.apply(idx)))));
    }
}

TEST_CASE("pi of a word") {
    const Field f7(7);
    const TauVector tau = tau234(f7);
    const auto e = Permutation::identity(4);

    CHECK(pi_of_word(BraidWord{}, tau, e) == Matrix::identity(f7, 4));

    // x_1^2: first factor at tau_1 = 2, second at tau_{s_1(1)} = tau_2 = 3;
    // the upper-left 2x2 block is [[5,1],[0,1]] * [[4,1],[0,1]] = [[6,6],[0,1]].
    const BraidWord w = BraidWord::parse("1,1");
    CHECK(pi_of_word(w, tau, e) ==
          from_rows(f7, {{6, 6, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

    // random words can route a strand to position 4, so use a full-length tau
    const TauVector tau4(f7, {2, 3, 4, 5});
    Rng rng(23);
    const BraidWord r = random_word(rng, 1, 3, 8);
    const EState folded = e_mul_word(EState{Matrix::identity(f7, 4), e}, r, tau4);
    CHECK(pi_of_word(r, tau4, e) == folded.matrix);
}

TEST_CASE("E-commuting of disjoint strand ranges") {
    const Field f7(7);
    const std::size_t n = 8;
    Rng rng(29);
    std::vector<FieldElement> tv(n);
    for (auto& t : tv) t = rng.nonzero_element(f7);
    const TauVector tau(f7, tv);

    CHECK(e_commutes(BraidWord{}, random_word(rng, 1, n - 1, 5), tau, n));

    for (int i = 0; i < 50; ++i) {
        const BraidWord a = random_word(rng, 1, 3, 8);
        const BraidWord b = random_word(rng, 5, 7, 8);
        CHECK(e_commutes(a, b, tau, n));
    }

    // adjacent strands generically do not E-commute
    CHECK_FALSE(e_commutes(BraidWord::parse("4"), BraidWord::parse("5"), tau, n));
}
