#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cbkap/matrix.hpp"

namespace cbkap {

// Element of S_n. Semantics are 1-based (images of 1..n); storage is 0-based.
// Composition is (g o h)(i) = g(h(i)): h acts first. This convention makes
// the variable action t_j -> t_{g(j)} a left action.
class Permutation {
public:
    static Permutation identity(std::size_t n);
    // The simple transposition s_i = (i, i+1), i in [1, n-1].
    static Permutation transposition(std::size_t n, std::size_t i);
    // From 1-based image list; validates bijectivity.
    static Permutation from_images(const std::vector<std::uint16_t>& one_based);

    std::size_t degree() const { return img_.size(); }

    // 1-based application: image of point i.
    std::size_t apply(std::size_t i) const { return img_[i - 1] + std::size_t{1}; }

    Permutation compose(const Permutation& h) const; // (*this) o h
    Permutation inverse() const;
    bool is_identity() const;

    std::vector<std::uint16_t> images_one_based() const;

    // Space-separated 1-based image list, e.g. "2 1 3".
    std::string text() const;
    static Permutation parse(std::string_view s);

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint16_t> img_; // 0-based images
};

// One generator (x_i(t), s_i) or its inverse.
struct BraidLetter {
    std::uint16_t index; // 1-based, in [1, n-1]
    std::int8_t sign;    // +1 or -1

    BraidLetter inverse() const { return {index, static_cast<std::int8_t>(-sign)}; }
    bool operator==(const BraidLetter&) const = default;
};

// Word in the generators of M x| G; the empty word is the identity. Words
// are kept fully expanded, never freely reduced.
struct BraidWord {
    std::vector<BraidLetter> letters;

    // Formal inverse: reversed letters with flipped signs.
    BraidWord inverse() const;
    BraidWord& append(const BraidWord& w);
    Permutation total_permutation(std::size_t n) const;
    std::size_t max_index() const;

    // Comma-separated signed indices: "1,2,-3" means x_1 x_2 x_3^{-1}.
    std::string text() const;
    static BraidWord parse(std::string_view s);

    bool operator==(const BraidWord&) const = default;
};

// Evaluation data for the map Pi: values tau_1..tau_len, all nonzero.
// The protocol stores len = n (see ttp_setup); standalone uses may store
// n-1 values, in which case evaluating a word whose permutation sends a
// generator index to n raises EvaluationError.
class TauVector {
public:
    TauVector(const Field& field, std::vector<FieldElement> values);

    const Field& field() const { return field_; }
    std::size_t size() const { return values_.size(); }

    // 1-based lookup of tau_i; throws EvaluationError when i > size().
    FieldElement at(std::size_t i) const;

    std::span<const FieldElement> values() const { return values_; }

    bool operator==(const TauVector&) const = default;

private:
    Field field_;
    std::vector<FieldElement> values_;
};

// Running value of iterated E-multiplication: an element of N x G.
struct EState {
    Matrix matrix;
    Permutation perm;

    bool operator==(const EState&) const = default;
};

// Pi(^g x_i(t)^sign): the colored Burau generator evaluated after the
// variable action of g, i.e. with t_i replaced by tau_{g(i)}. For sign -1
// this is the matrix inverse of the sign +1 result.
Matrix cb_generator_matrix(std::size_t i, int sign, const Permutation& g, const TauVector& tau);

// One E-multiplication step: state * (x_i(t), s_i)^{sign}.
EState e_mul_letter(const EState& s, BraidLetter l, const TauVector& tau);

// Left fold of e_mul_letter over the word.
EState e_mul_word(EState s, const BraidWord& w, const TauVector& tau);

// Matrix part of e_mul_word((I, g0), w); with g0 = e this is Pi(w).
Matrix pi_of_word(const BraidWord& w, const TauVector& tau, const Permutation& g0);

// Whether the semidirect-product elements of a and b E-commute.
bool e_commutes(const BraidWord& a, const BraidWord& b, const TauVector& tau, std::size_t n);

} // namespace cbkap
