// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "braidcrypt/garside.hpp"

namespace braidcrypt::kx {

/// Public session parameters: the two public tuples, the open exponent
/// halves, and the private word length bounds.
struct KxParams {
    int strands = 0;
    std::vector<PositiveWord> p;  // Alice draws her secret from these
    std::vector<PositiveWord> q;  // Bob draws his secret from these
    int k = 1;                    // Alice's exponent half: s * s1 = Delta^{2k}
    int h = 1;                    // Bob's exponent half:   r * r1 = Delta^{2h}
    int length_min = 4;
    int length_max = 16;

    void validate() const;
};

enum class Role { Alice, Bob };

/// A party's private material: the secret index sequence realizing the
/// private generator function, the resulting product, and its complement to
/// the agreed central power.
struct KxPrivate {
    Role role;
    std::vector<int> seq;  // 1-based indices into p (Alice) or q (Bob)
    PositiveWord secret;   // s (Alice) or r (Bob)
    PositiveWord cosecret; // s1 with s*s1 = Delta^{2k}, or r1 with r*r1 = Delta^{2h}
};

struct KxMessage {
    std::vector<NormalForm> transformed;  // every entry positive (inf >= 0)
};

struct SharedSecret {
    NormalForm value;               // NF(r1 * s * r * s1)
    std::array<uint8_t, 32> key;    // SHA-256 of the canonical encoding
};

/// Draws the secret index sequence from `seed` (length uniform in
/// [length_min, length_max], indices uniform over the role's tuple), forms
/// the product and its complement. Throws ExponentTooSmall, reporting the
/// least workable exponent half, when 2k (resp. 2h) < sup(secret).
KxPrivate kx_keygen(const KxParams& params, Role role, std::span<const uint8_t> seed);

/// Alice's outgoing tuple: q_i' = NF(s q_i s1).
KxMessage alice_message(const KxPrivate& priv, const KxParams& params);

/// Bob's outgoing tuple, mirrored: p_i' = NF(r1 p_i r).
KxMessage bob_message(const KxPrivate& priv, const KxParams& params);

/// S = Delta^{-2h(L-1)} * p'_{i_1} ... p'_{i_L} * s1, which collapses to
/// NF(r1 s r s1). The correction exponent uses the peer's half h and the
/// party's own sequence length.
SharedSecret alice_shared(const KxPrivate& priv, const KxMessage& msg,
                          const KxParams& params);

/// T = Delta^{-2k(L-1)} * r1 * q'_{i_1} ... q'_{i_L} = NF(r1 s r s1).
SharedSecret bob_shared(const KxPrivate& priv, const KxMessage& msg,
                        const KxParams& params);

std::array<uint8_t, 32> derive_session_key(const SharedSecret& secret);

}  // namespace braidcrypt::kx
