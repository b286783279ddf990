#include "cbkap/codec.hpp"

#include <nlohmann/json.hpp>

namespace cbkap {

namespace {

constexpr std::uint8_t kMagic[4] = {'A', 'E', 'K', 'E'};
constexpr std::uint8_t kVersion = 0x01;

class Writer {
public:
    explicit Writer(const Field& field) : field_(field) {}

    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v) {
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
        out_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v) {
        for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
    }

    void header(ObjectTag tag, std::size_t n) {
        for (std::uint8_t b : kMagic) u8(b);
        u8(kVersion);
        u8(static_cast<std::uint8_t>(tag));
        u16(static_cast<std::uint16_t>(n));
        u32(field_.p());
    }

    void element(FieldElement v) {
        for (std::size_t i = field_.byte_width(); i-- > 0;) {
            out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }

    void elements(std::span<const FieldElement> vs) {
        for (FieldElement v : vs) element(v);
    }

    void matrix(const Matrix& m) {
        u16(static_cast<std::uint16_t>(m.rows()));
        elements(m.entries());
    }

    void permutation(const Permutation& g) {
        for (std::uint16_t v : g.images_one_based()) u16(v);
    }

    void word(const BraidWord& w) {
        u32(static_cast<std::uint32_t>(w.letters.size()));
        for (const BraidLetter& l : w.letters) {
            u16(l.index);
            u8(l.sign > 0 ? 0x00 : 0x01);
        }
    }

    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    Field field_;
    std::vector<std::uint8_t> out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint8_t u8() {
        need(1);
        return bytes_[pos_++];
    }
    std::uint16_t u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(bytes_[pos_] << 8 | bytes_[pos_ + 1]);
        pos_ += 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = v << 8 | bytes_[pos_ + i];
        pos_ += 4;
        return v;
    }

    // Parses and validates the header; returns (n, field).
    std::pair<std::size_t, Field> header(ObjectTag expected) {
        for (std::uint8_t b : kMagic) {
            if (u8() != b) fail("bad magic", pos_ - 1);
        }
        if (u8() != kVersion) fail("unsupported version", pos_ - 1);
        if (u8() != static_cast<std::uint8_t>(expected)) fail("unexpected object tag", pos_ - 1);
        const std::size_t n = u16();
        if (n < 1) fail("n must be >= 1", pos_ - 2);
        const std::size_t p_off = pos_;
        const std::uint32_t p = u32();
        try {
            Field f(p);
            width_ = f.byte_width();
            return {n, f};
        } catch (const UsageError& e) {
            fail(e.what(), p_off);
        }
    }

    FieldElement element(const Field& f) {
        const std::size_t off = pos_;
        need(width_);
        FieldElement v = 0;
        for (std::size_t i = 0; i < width_; ++i) v = v << 8 | bytes_[pos_++];
        if (v >= f.p()) fail("field element out of range", off);
        return v;
    }

    std::vector<FieldElement> elements(const Field& f, std::size_t count) {
        std::vector<FieldElement> out(count);
        for (FieldElement& v : out) v = element(f);
        return out;
    }

    Matrix matrix(const Field& f) {
        const std::size_t off = pos_;
        const std::size_t dim = u16();
        if (dim < 1) fail("matrix dimension must be >= 1", off);
        Matrix m(f, dim, dim);
        for (FieldElement& e : m.entries()) e = element(f);
        return m;
    }

    Permutation permutation(std::size_t n) {
        const std::size_t off = pos_;
        std::vector<std::uint16_t> images(n);
        for (std::uint16_t& v : images) v = u16();
        try {
            return Permutation::from_images(images);
        } catch (const UsageError& e) {
            fail(e.what(), off);
        }
    }

    BraidWord word(std::size_t n) {
        const std::size_t count = u32();
        BraidWord w;
        w.letters.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t off = pos_;
            const std::uint16_t idx = u16();
            if (idx < 1 || idx >= n) fail("letter index out of range", off);
            const std::uint8_t s = u8();
            if (s > 1) fail("invalid sign byte", pos_ - 1);
            w.letters.push_back({idx, static_cast<std::int8_t>(s == 0 ? 1 : -1)});
        }
        return w;
    }

    void finish() const {
        if (pos_ != bytes_.size()) fail("trailing bytes", pos_);
    }

    [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
        throw ParseError(offset, what);
    }

private:
    void need(std::size_t k) const {
        if (pos_ + k > bytes_.size()) fail("truncated input", bytes_.size());
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
    std::size_t width_ = 0;
};

} // namespace

std::vector<std::uint8_t> serialize(const PublicParams& params) {
    Writer w(params.field);
    w.header(ObjectTag::params, params.n);
    w.u8(static_cast<std::uint8_t>(params.m_mode));
    w.u16(static_cast<std::uint16_t>(params.deg_m));
    w.u16(static_cast<std::uint16_t>(params.word_len_keys));
    w.u16(static_cast<std::uint16_t>(params.tau.size()));
    w.elements(params.tau.values());
    w.u32(static_cast<std::uint32_t>(params.a_generators.size()));
    for (const BraidWord& g : params.a_generators) w.word(g);
    w.u32(static_cast<std::uint32_t>(params.b_generators.size()));
    for (const BraidWord& g : params.b_generators) w.word(g);
    w.word(params.beta);
    w.matrix(params.m);
    return w.take();
}

std::vector<std::uint8_t> serialize(const PublicKey& pk) {
    Writer w(pk.state.matrix.field());
    w.header(ObjectTag::public_key, pk.state.matrix.rows());
    w.matrix(pk.state.matrix);
    w.permutation(pk.state.perm);
    return w.take();
}

std::vector<std::uint8_t> serialize(const PrivateKey& sk) {
    Writer w(sk.n_matrix.field());
    w.header(ObjectTag::private_key, sk.n_matrix.rows());
    w.u8(static_cast<std::uint8_t>(sk.side));
    w.u32(static_cast<std::uint32_t>(sk.n_coeffs.size()));
    w.elements(sk.n_coeffs);
    w.matrix(sk.n_matrix);
    w.word(sk.word);
    return w.take();
}

std::vector<std::uint8_t> serialize(const SharedSecret& s) {
    Writer w(s.state.matrix.field());
    w.header(ObjectTag::secret, s.state.matrix.rows());
    w.matrix(s.state.matrix);
    w.permutation(s.state.perm);
    return w.take();
}

PublicParams deserialize_params(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    auto [n, field] = r.header(ObjectTag::params);
    const std::uint8_t mode = r.u8();
    if (mode > 1) r.fail("invalid mMode byte", 12);
    const std::size_t deg_m = r.u16();
    const std::size_t word_len = r.u16();
    const std::size_t tau_len = r.u16();
    std::vector<FieldElement> tau_values = r.elements(field, tau_len);
    for (FieldElement v : tau_values) {
        if (v == 0) r.fail("tau values must be nonzero", 0);
    }
    TauVector tau(field, std::move(tau_values));
    std::vector<BraidWord> a_gens(r.u32());
    for (BraidWord& g : a_gens) g = r.word(n);
    std::vector<BraidWord> b_gens(r.u32());
    for (BraidWord& g : b_gens) g = r.word(n);
    BraidWord beta = r.word(n);
    Matrix m = r.matrix(field);
    if (m.rows() != n) r.fail("matrix dimension does not match header", 0);
    r.finish();
    return PublicParams{n,   field,  static_cast<MMode>(mode), deg_m, word_len,
                        tau, a_gens, b_gens,                   beta,  m};
}

PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    auto [n, field] = r.header(ObjectTag::public_key);
    Matrix m = r.matrix(field);
    if (m.rows() != n) r.fail("matrix dimension does not match header", 0);
    Permutation g = r.permutation(n);
    r.finish();
    return PublicKey{EState{std::move(m), std::move(g)}};
}

PrivateKey deserialize_private_key(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    auto [n, field] = r.header(ObjectTag::private_key);
    const std::uint8_t side = r.u8();
    if (side > 1) r.fail("invalid side byte", 12);
    std::vector<FieldElement> coeffs = r.elements(field, r.u32());
    Matrix m = r.matrix(field);
    if (m.rows() != n) r.fail("matrix dimension does not match header", 0);
    BraidWord word = r.word(n);
    r.finish();
    return PrivateKey{static_cast<Side>(side), std::move(m), std::move(coeffs), std::move(word)};
}

SharedSecret deserialize_secret(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    auto [n, field] = r.header(ObjectTag::secret);
    Matrix m = r.matrix(field);
    if (m.rows() != n) r.fail("matrix dimension does not match header", 0);
    Permutation g = r.permutation(n);
    r.finish();
    return SharedSecret{EState{std::move(m), std::move(g)}};
}

namespace {

using nlohmann::json;

json word_json(const BraidWord& w) { return w.text(); }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json state_json(const EState& s) {
    return json{{"matrix", matrix_json(s.matrix)}, {"permutation", s.perm.text()}};
}

} // namespace

std::string to_json_text(const PublicParams& params) {
    json j{{"n", params.n},
           {"p", params.field.p()},
           {"mode", params.m_mode == MMode::defended ? "defended" : "baseline"},
           {"degM", params.deg_m},
           {"wordLenKeys", params.word_len_keys},
           {"tau", std::vector<FieldElement>(params.tau.values().begin(), params.tau.values().end())},
           {"beta", word_json(params.beta)},
           {"m", matrix_json(params.m)}};
    json a = json::array(), b = json::array();
    for (const BraidWord& g : params.a_generators) a.push_back(word_json(g));
    for (const BraidWord& g : params.b_generators) b.push_back(word_json(g));
    j["aGenerators"] = std::move(a);
    j["bGenerators"] = std::move(b);
    return j.dump(2);
}

std::string to_json_text(const PublicKey& pk) {
    json j{{"n", pk.state.matrix.rows()},
           {"p", pk.state.matrix.field().p()},
           {"state", state_json(pk.state)}};
    return j.dump(2);
}

std::string to_json_text(const PrivateKey& sk) {
    json j{{"n", sk.n_matrix.rows()},
           {"p", sk.n_matrix.field().p()},
           {"side", sk.side == Side::alice ? "alice" : "bob"},
           {"nCoeffs", sk.n_coeffs},
           {"nMatrix", matrix_json(sk.n_matrix)},
           {"word", word_json(sk.word)}};
    return j.dump(2);
}

std::string to_json_text(const SharedSecret& s) {
    json j{{"n", s.state.matrix.rows()},
           {"p", s.state.matrix.field().p()},
           {"state", state_json(s.state)}};
    return j.dump(2);
}

} // namespace cbkap
