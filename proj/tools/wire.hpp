#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbkap::wire {

// Frame types for the key-exchange harness. Framing is 1-byte type,
// 4-byte big-endian payload length, payload.
enum class FrameType : std::uint8_t { hello = 0x01, pubkey = 0x02, done = 0x03 };

struct Frame {
    FrameType type;
    std::vector<std::uint8_t> payload;
};

class WireError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// SHA-256 of the canonical params bytes; both sides must agree before
// exchanging keys.
std::array<std::uint8_t, 32> params_hash(const std::vector<std::uint8_t>& params_bytes);

class Connection {
public:
    explicit Connection(int fd) : fd_(fd) {}
    ~Connection();
    Connection(const Connection&) = delete;
    Connection& operator=(const Connection&) = delete;

    void send(FrameType type, const std::vector<std::uint8_t>& payload);
    Frame recv();

private:
    int fd_;
};

// One-shot handshake from each end: HELLO (params hash) both ways, PUBKEY
// both ways, DONE both ways. Returns the peer's public-key bytes; throws
// WireError on connection failure, framing violation, or params mismatch.
std::vector<std::uint8_t> serve_exchange(std::uint16_t port,
                                         const std::vector<std::uint8_t>& params_bytes,
                                         const std::vector<std::uint8_t>& pubkey_bytes);
std::vector<std::uint8_t> connect_exchange(const std::string& host, std::uint16_t port,
                                           const std::vector<std::uint8_t>& params_bytes,
                                           const std::vector<std::uint8_t>& pubkey_bytes);

} // namespace cbkap::wire
