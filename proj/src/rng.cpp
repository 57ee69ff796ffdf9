// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/rng.hpp"

#include "braidcrypt/errors.hpp"

namespace braidcrypt {

SeedStream::SeedStream(std::span<const uint8_t> seed)
    : seed_(seed.begin(), seed.end()) {
    if (seed_.empty()) {
        throw BadParameter("seed must be nonempty");
    }
}

void SeedStream::refill() {
    uint8_t suffix[8];
    for (int i = 0; i < 8; ++i) {
        suffix[i] = static_cast<uint8_t>(counter_ >> (56 - 8 * i));
    }
    block_ = sha256_concat({std::span<const uint8_t>(seed_),
                            std::span<const uint8_t>(suffix, 8)});
    ++counter_;
    used_ = 0;
}

uint8_t SeedStream::next_byte() {
    if (used_ >= block_.size()) refill();
    return block_[used_++];
}

uint32_t SeedStream::next_u32() {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = v << 8 | next_byte();
    return v;
}

uint64_t SeedStream::uniform(uint64_t lo, uint64_t hi) {
    if (lo > hi) throw BadParameter("uniform: empty range");
    uint64_t span = hi - lo + 1;
    if (span == 0) {  // hi - lo covers the whole 64-bit range
        return static_cast<uint64_t>(next_u32()) << 32 | next_u32();
    }
    if (span == 1) return lo;
    if (span <= (uint64_t{1} << 32)) {
        // draw 32-bit words; reject above the largest multiple of span
        uint64_t limit = (uint64_t{1} << 32) / span * span;
        for (;;) {
            uint64_t draw = next_u32();
            if (draw < limit) return lo + draw % span;
        }
    }
    uint64_t limit = ~uint64_t{0} / span * span;
    for (;;) {
        uint64_t draw = static_cast<uint64_t>(next_u32()) << 32 | next_u32();
        if (draw < limit) return lo + draw % span;
    }
}

}  // namespace braidcrypt
