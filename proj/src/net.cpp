// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <iostream>
#include <vector>

#include "braidcrypt/sha256.hpp"
#include "braidcrypt/wire.hpp"

namespace braidcrypt::net {

namespace {

constexpr int kTimeoutSeconds = 30;

struct Fd {
    int fd = -1;
    Fd() = default;
    explicit Fd(int f) : fd(f) {}
    Fd(const Fd&) = delete;
    Fd& operator=(const Fd&) = delete;
    Fd(Fd&& other) noexcept : fd(other.fd) { other.fd = -1; }
    ~Fd() {
        if (fd >= 0) ::close(fd);
    }
};

void set_timeouts(int fd) {
    timeval tv{};
    tv.tv_sec = kTimeoutSeconds;
    setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
    setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof(tv));
}

void write_full(int fd, const uint8_t* data, std::size_t size) {
    while (size > 0) {
        ssize_t wrote = ::write(fd, data, size);
        if (wrote < 0 && errno == EINTR) continue;
        if (wrote <= 0) throw ProtocolCorrupt("connection write failed");
        data += wrote;
        size -= static_cast<std::size_t>(wrote);
    }
}

void read_full(int fd, uint8_t* data, std::size_t size) {
    while (size > 0) {
        ssize_t got = ::read(fd, data, size);
        if (got < 0 && errno == EINTR) continue;
        if (got <= 0) throw ProtocolCorrupt("connection closed or timed out");
        data += got;
        size -= static_cast<std::size_t>(got);
    }
}

void send_frame(int fd, const wire::Frame& frame) {
    auto bytes = wire::encode_frame(frame);
    write_full(fd, bytes.data(), bytes.size());
}

wire::Frame recv_frame(int fd) {
    uint8_t header[4];
    read_full(fd, header, 4);
    uint32_t length = 0;
    for (uint8_t byte : header) length = length << 8 | byte;
    if (length == 0 || length > wire::kMaxFrameBytes) {
        throw ProtocolCorrupt("peer announced an invalid frame length");
    }
    std::vector<uint8_t> body(length);
    read_full(fd, body.data(), body.size());
    std::vector<uint8_t> whole;
    whole.reserve(4 + body.size());
    whole.insert(whole.end(), header, header + 4);
    whole.insert(whole.end(), body.begin(), body.end());
    std::size_t consumed = 0;
    return wire::decode_frame(whole, consumed);
}

void send_error(int fd, const std::string& what) noexcept {
    try {
        wire::Frame frame{wire::kFrameError, std::vector<uint8_t>(what.begin(), what.end())};
        send_frame(fd, frame);
    } catch (...) {
        // channel already broken; nothing more to do
    }
}

}  // namespace

int serve(uint16_t port, const kx::KxParams& params, std::span<const uint8_t> seed,
          bool once, std::ostream& out) {
    kx::KxPrivate priv = kx::kx_keygen(params, kx::Role::Bob, seed);
    kx::KxMessage reply = kx::bob_message(priv, params);
    auto reply_bytes = wire::encode_braid_list(reply.transformed);

    Fd listener(::socket(AF_INET, SOCK_STREAM, 0));
    if (listener.fd < 0) throw ProtocolCorrupt("socket() failed");
    int one = 1;
    setsockopt(listener.fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    if (::bind(listener.fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        throw ProtocolCorrupt("bind() failed: " + std::string(std::strerror(errno)));
    }
    socklen_t addr_len = sizeof(addr);
    getsockname(listener.fd, reinterpret_cast<sockaddr*>(&addr), &addr_len);
    if (::listen(listener.fd, 8) != 0) throw ProtocolCorrupt("listen() failed");
    out << "PORT " << ntohs(addr.sin_port) << "\n" << std::flush;

    for (;;) {
        Fd conn(::accept(listener.fd, nullptr, nullptr));
        if (conn.fd < 0) {
            if (errno == EINTR) continue;
            throw ProtocolCorrupt("accept() failed");
        }
        set_timeouts(conn.fd);
        try {
            wire::Frame frame = recv_frame(conn.fd);
            if (frame.type != wire::kFrameAliceTuple) {
                throw ProtocolCorrupt("expected the initiator tuple frame");
            }
            kx::KxMessage incoming{wire::decode_braid_list(frame.payload)};
            kx::SharedSecret shared = kx::bob_shared(priv, incoming, params);
            send_frame(conn.fd, wire::Frame{wire::kFrameBobTuple, reply_bytes});
            out << to_hex(kx::derive_session_key(shared)) << "\n" << std::flush;
        } catch (const Error& e) {
            send_error(conn.fd, e.what());
            if (once) return 3;
            continue;
        }
        if (once) return 0;
    }
}

int connect_peer(const std::string& host, uint16_t port, const kx::KxParams& params,
                 std::span<const uint8_t> seed, std::ostream& out) {
    kx::KxPrivate priv = kx::kx_keygen(params, kx::Role::Alice, seed);
    kx::KxMessage outgoing = kx::alice_message(priv, params);

    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* results = nullptr;
    if (getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &results) != 0 ||
        results == nullptr) {
        throw ProtocolCorrupt("cannot resolve host '" + host + "'");
    }
    Fd conn(::socket(results->ai_family, results->ai_socktype, results->ai_protocol));
    int rc = conn.fd < 0 ? -1
                         : ::connect(conn.fd, results->ai_addr, results->ai_addrlen);
    freeaddrinfo(results);
    if (rc != 0) throw ProtocolCorrupt("connect() failed");
    set_timeouts(conn.fd);

    send_frame(conn.fd, wire::Frame{wire::kFrameAliceTuple,
                                    wire::encode_braid_list(outgoing.transformed)});
    wire::Frame frame = recv_frame(conn.fd);
    if (frame.type == wire::kFrameError) {
        throw ProtocolCorrupt("peer reported: " +
                              std::string(frame.payload.begin(), frame.payload.end()));
    }
    if (frame.type != wire::kFrameBobTuple) {
        throw ProtocolCorrupt("expected the responder tuple frame");
    }
    kx::KxMessage incoming{wire::decode_braid_list(frame.payload)};
    kx::SharedSecret shared = kx::alice_shared(priv, incoming, params);
    out << to_hex(kx::derive_session_key(shared)) << "\n" << std::flush;
    return 0;
}

}  // namespace braidcrypt::net
