// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "braidcrypt/kx.hpp"

namespace braidcrypt::net {

/// Runs the demo responder (Bob). Binds `port` (0 picks a free one) and
/// prints "PORT <p>" followed by one lowercase-hex session key line per
/// completed handshake. Handles connections one at a time; 30 s of
/// inactivity aborts a session. Returns 0, or 3 if `once` is set and the
/// single session failed.
int serve(uint16_t port, const kx::KxParams& params, std::span<const uint8_t> seed,
          bool once, std::ostream& out);

/// Runs the demo initiator (Alice) against host:port and prints the session
/// key as lowercase hex. Returns 0 on success, 3 on protocol failure.
int connect_peer(const std::string& host, uint16_t port, const kx::KxParams& params,
                 std::span<const uint8_t> seed, std::ostream& out);

}  // namespace braidcrypt::net
