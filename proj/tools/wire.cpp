#include "wire.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

#include <openssl/evp.h>

namespace cbkap::wire {

namespace {

constexpr std::size_t kMaxPayload = 1u << 24;

void write_all(int fd, const std::uint8_t* data, std::size_t len) {
    while (len > 0) {
        const ssize_t k = ::write(fd, data, len);
        if (k <= 0) throw WireError("short write on socket");
        data += k;
        len -= static_cast<std::size_t>(k);
    }
}

void read_all(int fd, std::uint8_t* data, std::size_t len) {
    while (len > 0) {
        const ssize_t k = ::read(fd, data, len);
        if (k <= 0) throw WireError("truncated frame (peer closed early)");
        data += k;
        len -= static_cast<std::size_t>(k);
    }
}

class Socket {
public:
    explicit Socket(int fd) : fd_(fd) {
        if (fd_ < 0) throw WireError("socket creation failed");
    }
    ~Socket() {
        if (fd_ >= 0) ::close(fd_);
    }
    int release() {
        int fd = fd_;
        fd_ = -1;
        return fd;
    }
    int get() const { return fd_; }

private:
    int fd_;
};

std::vector<std::uint8_t> run_handshake(Connection& conn, bool initiate,
                                        const std::array<std::uint8_t, 32>& hash,
                                        const std::vector<std::uint8_t>& pubkey_bytes) {
    const std::vector<std::uint8_t> hello(hash.begin(), hash.end());

    auto expect = [&](FrameType type) {
        Frame f = conn.recv();
        if (f.type != type) throw WireError("unexpected frame type");
        return f.payload;
    };

    std::vector<std::uint8_t> peer_key;
    if (initiate) {
        conn.send(FrameType::hello, hello);
        if (expect(FrameType::hello) != hello) throw WireError("params hash mismatch");
        conn.send(FrameType::pubkey, pubkey_bytes);
        peer_key = expect(FrameType::pubkey);
        conn.send(FrameType::done, {});
        expect(FrameType::done);
    } else {
        if (expect(FrameType::hello) != hello) throw WireError("params hash mismatch");
        conn.send(FrameType::hello, hello);
        peer_key = expect(FrameType::pubkey);
        conn.send(FrameType::pubkey, pubkey_bytes);
        expect(FrameType::done);
        conn.send(FrameType::done, {});
    }
    return peer_key;
}

} // namespace

std::array<std::uint8_t, 32> params_hash(const std::vector<std::uint8_t>& params_bytes) {
    std::array<std::uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(params_bytes.data(), params_bytes.size(), out.data(), &len, EVP_sha256(),
                   nullptr) != 1 ||
        len != out.size()) {
        throw WireError("SHA-256 failed");
    }
    return out;
}

Connection::~Connection() { ::close(fd_); }

void Connection::send(FrameType type, const std::vector<std::uint8_t>& payload) {
    std::vector<std::uint8_t> header(5);
    header[0] = static_cast<std::uint8_t>(type);
    const std::uint32_t len = static_cast<std::uint32_t>(payload.size());
    for (int i = 0; i < 4; ++i) header[1 + i] = static_cast<std::uint8_t>(len >> (24 - 8 * i));
    write_all(fd_, header.data(), header.size());
    if (!payload.empty()) write_all(fd_, payload.data(), payload.size());
}

Frame Connection::recv() {
    std::uint8_t header[5];
    read_all(fd_, header, sizeof(header));
    if (header[0] < 0x01 || header[0] > 0x03) throw WireError("unknown frame type");
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = len << 8 | header[1 + i];
    if (len > kMaxPayload) throw WireError("frame too large");
    Frame f{static_cast<FrameType>(header[0]), std::vector<std::uint8_t>(len)};
    if (len > 0) read_all(fd_, f.payload.data(), len);
    return f;
}

std::vector<std::uint8_t> serve_exchange(std::uint16_t port,
                                         const std::vector<std::uint8_t>& params_bytes,
                                         const std::vector<std::uint8_t>& pubkey_bytes) {
    Socket listener(::socket(AF_INET, SOCK_STREAM, 0));
    const int one = 1;
    ::setsockopt(listener.get(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(listener.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        throw WireError("bind failed");
    }
    if (::listen(listener.get(), 1) != 0) throw WireError("listen failed");

    const int fd = ::accept(listener.get(), nullptr, nullptr);
    if (fd < 0) throw WireError("accept failed");
    Connection conn(fd);
    return run_handshake(conn, /*initiate=*/false, params_hash(params_bytes), pubkey_bytes);
}

std::vector<std::uint8_t> connect_exchange(const std::string& host, std::uint16_t port,
                                           const std::vector<std::uint8_t>& params_bytes,
                                           const std::vector<std::uint8_t>& pubkey_bytes) {
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) != 0 || !res) {
        throw WireError("host resolution failed");
    }
    Socket sock(::socket(res->ai_family, res->ai_socktype, res->ai_protocol));
    const int rc = ::connect(sock.get(), res->ai_addr, res->ai_addrlen);
    ::freeaddrinfo(res);
    if (rc != 0) throw WireError("connect failed");
    Connection conn(sock.release());
    return run_handshake(conn, /*initiate=*/true, params_hash(params_bytes), pubkey_bytes);
}

} // namespace cbkap::wire
