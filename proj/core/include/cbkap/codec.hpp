#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cbkap/protocol.hpp"

namespace cbkap {

// Canonical binary format, all integers big-endian:
//   header: magic "AEKE" | version 0x01 | object tag | n (2 bytes) | p (4 bytes)
//   field elements: fixed width W = ceil(bits(p)/8)
//   matrices: dimension as 2 bytes, then entries row-major
//   permutations: n one-based 2-byte images
//   words: 4-byte letter count, then per letter 2-byte index + 1-byte sign
//          (0x00 = +, 0x01 = -)
// Serialization of equal values is byte-identical.

enum class ObjectTag : std::uint8_t {
    params = 0x01,
    public_key = 0x02,
    private_key = 0x03,
    secret = 0x04,
};

std::vector<std::uint8_t> serialize(const PublicParams& params);
std::vector<std::uint8_t> serialize(const PublicKey& pk);
std::vector<std::uint8_t> serialize(const PrivateKey& sk);
std::vector<std::uint8_t> serialize(const SharedSecret& s);

// Each deserializer validates the header, every invariant of the decoded
// value, and rejects trailing bytes; throws ParseError with the offending
// offset.
PublicParams deserialize_params(std::span<const std::uint8_t> bytes);
PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes);
PrivateKey deserialize_private_key(std::span<const std::uint8_t> bytes);
SharedSecret deserialize_secret(std::span<const std::uint8_t> bytes);

// Non-canonical JSON mirror of the same fields, for human inspection.
std::string to_json_text(const PublicParams& params);
std::string to_json_text(const PublicKey& pk);
std::string to_json_text(const PrivateKey& sk);
std::string to_json_text(const SharedSecret& s);

} // namespace cbkap
