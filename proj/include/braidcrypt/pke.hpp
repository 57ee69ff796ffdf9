// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "braidcrypt/garside.hpp"

namespace braidcrypt::pke {

struct PkeParams {
    int strands = 0;
    std::vector<PositiveWord> p;
    std::vector<PositiveWord> q;
    int length_min = 4;
    int length_max = 16;

    void validate() const;
};

/// Published: the parameter tuples, the key holder's exponent half d, and the
/// transformed tuple q_i' = s q_i s1. The p tuple rides along because the
/// encryptor needs it to form r1 p_i r.
struct PkePublicKey {
    PkeParams params;
    int d = 1;
    std::vector<NormalForm> qprime;
};

struct PkeSecretKey {
    std::vector<int> seq;   // 1-based indices into p
    PositiveWord s;
    PositiveWord s1;        // s * s1 = Delta^{2d}
};

struct Ciphertext {
    int t = 1;                     // encryptor's per-message exponent half
    std::vector<NormalForm> Y;     // r1 p_i r, all positive
    std::vector<uint8_t> c;        // msg XOR keystream
};

std::pair<PkePublicKey, PkeSecretKey> pke_keygen(const PkeParams& params, int d,
                                                 std::span<const uint8_t> seed);

Ciphertext pke_encrypt(const PkePublicKey& pk, std::span<const uint8_t> msg,
                       std::span<const uint8_t> seed);

std::vector<uint8_t> pke_decrypt(const PkeSecretKey& sk, const PkePublicKey& pk,
                                 const Ciphertext& ct);

/// key = SHA-256(list-encoding of Y || encoding of Z); stream block j is
/// SHA-256(key || j as 8-byte big-endian), truncated to `length`.
std::pair<std::array<uint8_t, 32>, std::vector<uint8_t>> kdf_and_keystream(
    std::span<const NormalForm> Y, const NormalForm& Z, std::size_t length);

// Ciphertext file format: "BCT1" | t u32be | braid list Y | raw c bytes.
std::vector<uint8_t> encode_ciphertext(const Ciphertext& ct);
Ciphertext decode_ciphertext(std::span<const uint8_t> bytes);

}  // namespace braidcrypt::pke
