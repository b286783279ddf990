#include "cbkap/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace cbkap {

Permutation Permutation::identity(std::size_t n) {
    Permutation g;
    g.img_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.img_[i] = static_cast<std::uint16_t>(i);
    return g;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw UsageError("transposition index out of range");
    Permutation g = identity(n);
    std::swap(g.img_[i - 1], g.img_[i]);
    return g;
}

Permutation Permutation::from_images(const std::vector<std::uint16_t>& one_based) {
    const std::size_t n = one_based.size();
    if (n == 0) throw UsageError("permutation degree must be >= 1");
    std::vector<bool> seen(n, false);
    Permutation g;
    g.img_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t v = one_based[i];
        if (v < 1 || v > n || seen[v - 1]) throw UsageError("image list is not a bijection");
        seen[v - 1] = true;
        g.img_[i] = static_cast<std::uint16_t>(v - 1);
    }
    return g;
}

Permutation Permutation::compose(const Permutation& h) const {
    if (degree() != h.degree()) throw UsageError("permutation degree mismatch");
    Permutation out;
    out.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.img_[i] = img_[h.img_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.img_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.img_[img_[i]] = static_cast<std::uint16_t>(i);
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (img_[i] != i) return false;
    }
    return true;
}

std::vector<std::uint16_t> Permutation::images_one_based() const {
    std::vector<std::uint16_t> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = static_cast<std::uint16_t>(img_[i] + 1);
    return out;
}

std::string Permutation::text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ' ';
        os << img_[i] + 1;
    }
    return os.str();
}

Permutation Permutation::parse(std::string_view s) {
    std::vector<std::uint16_t> images;
    std::istringstream is{std::string(s)};
    unsigned v;
    while (is >> v) {
        if (v == 0 || v > 0xffff) throw UsageError("permutation image out of range");
        images.push_back(static_cast<std::uint16_t>(v));
    }
    if (!is.eof()) throw UsageError("malformed permutation text");
    return from_images(images);
}

BraidWord BraidWord::inverse() const {
    BraidWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
    return out;
}

BraidWord& BraidWord::append(const BraidWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
}

Permutation BraidWord::total_permutation(std::size_t n) const {
    Permutation g = Permutation::identity(n);
    for (const BraidLetter& l : letters) g = g.compose(Permutation::transposition(n, l.index));
    return g;
}

std::size_t BraidWord::max_index() const {
    std::size_t m = 0;
    for (const BraidLetter& l : letters) m = std::max<std::size_t>(m, l.index);
    return m;
}

std::string BraidWord::text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ',';
        os << static_cast<int>(letters[i].sign) * static_cast<int>(letters[i].index);
    }
    return os.str();
}

BraidWord BraidWord::parse(std::string_view s) {
    BraidWord w;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string_view::npos) end = s.size();
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, v);
        if (ec != std::errc{} || ptr != s.data() + end || v == 0 || std::abs(v) > 0xffff) {
            throw UsageError("malformed braid word text");
        }
        w.letters.push_back({static_cast<std::uint16_t>(std::abs(v)),
                             static_cast<std::int8_t>(v > 0 ? 1 : -1)});
        pos = end + 1;
    }
    return w;
}

TauVector::TauVector(const Field& field, std::vector<FieldElement> values)
    : field_(field), values_(std::move(values)) {
    for (FieldElement v : values_) {
        if (v == 0 || v >= field_.p()) throw UsageError("tau values must be nonzero canonical residues");
    }
}

FieldElement TauVector::at(std::size_t i) const {
    if (i < 1 || i > values_.size()) {
        throw EvaluationError("evaluation requested tau_" + std::to_string(i) +
                              " outside the stored range 1.." + std::to_string(values_.size()));
    }
    return values_[i - 1];
}

Matrix cb_generator_matrix(std::size_t i, int sign, const Permutation& g, const TauVector& tau) {
    const std::size_t n = g.degree();
    if (i < 1 || i >= n) throw UsageError("generator index out of range");
    const FieldElement t = tau.at(g.apply(i)); // variable action: t_i -> t_{g(i)}
    const Field& f = tau.field();
    Matrix m = Matrix::identity(f, n);
    if (i == 1) {
        m.at(0, 0) = f.neg(t);
        m.at(0, 1) = 1;
    } else {
        m.at(i - 1, i - 2) = t;
        m.at(i - 1, i - 1) = f.neg(t);
        m.at(i - 1, i) = 1;
    }
    if (sign < 0) return mat_inv(m); // invertible: det = +-t != 0
    return m;
}

EState e_mul_letter(const EState& s, BraidLetter l, const TauVector& tau) {
    const Permutation next = s.perm.compose(Permutation::transposition(s.perm.degree(), l.index));
    if (l.sign > 0) {
        return {s.matrix * cb_generator_matrix(l.index, +1, s.perm, tau), next};
    }
    // (x_i, s_i)^{-1} = (^{s_i} x_i^{-1}, s_i), so the matrix factor is the
    // generator evaluated at perm o s_i, then inverted.
    return {s.matrix * cb_generator_matrix(l.index, -1, next, tau), next};
}

EState e_mul_word(EState s, const BraidWord& w, const TauVector& tau) {
    for (const BraidLetter& l : w.letters) s = e_mul_letter(s, l, tau);
    return s;
}

Matrix pi_of_word(const BraidWord& w, const TauVector& tau, const Permutation& g0) {
    const std::size_t n = g0.degree();
    EState s{Matrix::identity(tau.field(), n), g0};
    return e_mul_word(std::move(s), w, tau).matrix;
}

bool e_commutes(const BraidWord& a, const BraidWord& b, const TauVector& tau, std::size_t n) {
    const EState id{Matrix::identity(tau.field(), n), Permutation::identity(n)};
    const EState state_a = e_mul_word(id, a, tau);
    const EState state_b = e_mul_word(id, b, tau);
    return e_mul_word(state_a, b, tau) == e_mul_word(state_b, a, tau);
}

} // namespace cbkap
