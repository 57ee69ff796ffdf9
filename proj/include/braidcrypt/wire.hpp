// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "braidcrypt/garside.hpp"

namespace braidcrypt::wire {

// Canonical braid encoding, the hash preimage format:
//   "BRD1" | n u16be | inf i32be | r u32be | r permutation tables,
// each table n bytes with byte i-1 = perm[i] in 1..n. Equal braids (same
// normal form) encode identically, so hashes over encodings are functions
// on B_n rather than on words. Tables cap n at 255.
std::vector<uint8_t> encode_nf(const NormalForm& x);

/// Strict inverse of encode_nf: consumes the whole buffer and re-validates
/// every NormalForm invariant (bijectivity, no e/Delta factors,
/// left-weightedness of adjacent pairs).
NormalForm decode_nf(std::span<const uint8_t> bytes);

// Braid lists: count u32be, then the concatenated encodings. Hash preimages
// over tuples use exactly this.
std::vector<uint8_t> encode_braid_list(std::span<const NormalForm> braids);
std::vector<NormalForm> decode_braid_list(std::span<const uint8_t> bytes);

// Demo channel framing: length u32be (= 1 + payload size), a type byte,
// payload. Frames above 16 MiB are rejected before any allocation.
struct Frame {
    uint8_t type = 0;
    std::vector<uint8_t> payload;
};

inline constexpr uint8_t kFrameAliceTuple = 0x01;
inline constexpr uint8_t kFrameBobTuple = 0x02;
inline constexpr uint8_t kFrameError = 0x03;
inline constexpr uint32_t kMaxFrameBytes = 16u * 1024 * 1024;

std::vector<uint8_t> encode_frame(const Frame& frame);
/// Parses one frame from the front of `bytes`; `consumed` reports how many
/// bytes it used.
Frame decode_frame(std::span<const uint8_t> bytes, std::size_t& consumed);

std::string to_base64(std::span<const uint8_t> data);
std::vector<uint8_t> from_base64(std::string_view text);

}  // namespace braidcrypt::wire
