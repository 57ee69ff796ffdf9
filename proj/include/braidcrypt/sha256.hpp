// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidcrypt {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);

/// SHA-256 over the concatenation of several buffers, without copying them
/// into one.
Digest sha256_concat(std::initializer_list<std::span<const uint8_t>> parts);

std::string to_hex(std::span<const uint8_t> data);
std::vector<uint8_t> from_hex(std::string_view hex);

}  // namespace braidcrypt
