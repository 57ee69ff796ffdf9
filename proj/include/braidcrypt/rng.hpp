// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "braidcrypt/sha256.hpp"

namespace braidcrypt {

/// Deterministic byte stream: block j is SHA-256(seed || j as 8-byte
/// big-endian), j = 0, 1, 2, ... All protocol sampling goes through this so
/// that a (params, seed) pair pins the whole transcript.
class SeedStream {
  public:
    explicit SeedStream(std::span<const uint8_t> seed);

    uint8_t next_byte();
    uint32_t next_u32();  // big-endian from the stream

    /// Uniform in [lo, hi], inclusive; rejection-sampled, so unbiased and
    /// identical across platforms.
    uint64_t uniform(uint64_t lo, uint64_t hi);

  private:
    void refill();

    std::vector<uint8_t> seed_;
    uint64_t counter_ = 0;
    Digest block_{};
    std::size_t used_ = sizeof(Digest);
};

}  // namespace braidcrypt
