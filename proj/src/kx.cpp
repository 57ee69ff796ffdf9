// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/kx.hpp"

#include <string>

#include "braidcrypt/rng.hpp"
#include "braidcrypt/wire.hpp"

namespace braidcrypt::kx {

namespace {

const std::vector<PositiveWord>& tuple_for(const KxParams& params, Role role) {
    return role == Role::Alice ? params.p : params.q;
}

PositiveWord product_of(const KxParams& params, Role role, const std::vector<int>& seq) {
    const auto& tuple = tuple_for(params, role);
    PositiveWord out(params.strands, {});
    for (int idx : seq) {
        out = multiply(out, tuple[static_cast<std::size_t>(idx - 1)]);
    }
    return out;
}

NormalForm product_nf(const std::vector<NormalForm>& entries, const std::vector<int>& seq,
                      int strands) {
    NormalForm out = NormalForm::identity(strands);
    for (int idx : seq) {
        out = nf_multiply(out, entries[static_cast<std::size_t>(idx - 1)]);
    }
    return out;
}

void require_role(const KxPrivate& priv, Role expected, const char* op) {
    if (priv.role != expected) {
        throw WrongRole(std::string(op) + " called with the other party's private key");
    }
}

}  // namespace

void KxParams::validate() const {
    if (strands < 2) throw BadParameter("params: n must be at least 2");
    if (p.empty() || q.empty()) throw BadParameter("params: public tuples must be nonempty");
    if (k < 1 || h < 1) throw BadParameter("params: exponent halves k, h must be >= 1");
    if (length_min < 1 || length_min > length_max) {
        throw BadParameter("params: need 1 <= L_min <= L_max");
    }
    for (const auto& w : p) {
        if (w.strands() != strands) throw StrandMismatch("params: p entry strand mismatch");
    }
    for (const auto& w : q) {
        if (w.strands() != strands) throw StrandMismatch("params: q entry strand mismatch");
    }
}

KxPrivate kx_keygen(const KxParams& params, Role role, std::span<const uint8_t> seed) {
    params.validate();
    SeedStream stream(seed);
    const auto& tuple = tuple_for(params, role);
    const auto length = static_cast<std::size_t>(
        stream.uniform(static_cast<uint64_t>(params.length_min),
                       static_cast<uint64_t>(params.length_max)));
    std::vector<int> seq;
    seq.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        seq.push_back(static_cast<int>(stream.uniform(1, tuple.size())));
    }
    PositiveWord secret = product_of(params, role, seq);
    const int half = role == Role::Alice ? params.k : params.h;
    const int64_t sup = left_normal_form(secret.word()).sup();
    if (2 * static_cast<int64_t>(half) < sup) {
        const int min_half = static_cast<int>((sup + 1) / 2);
        throw ExponentTooSmall(
            "exponent half " + std::to_string(half) + " too small: need 2*half >= sup(secret) = " +
                std::to_string(sup) + " (least workable half: " + std::to_string(min_half) + ")",
            min_half);
    }
    PositiveWord cosecret = complement(secret, 2 * static_cast<int64_t>(half));
    return KxPrivate{role, std::move(seq), std::move(secret), std::move(cosecret)};
}

KxMessage alice_message(const KxPrivate& priv, const KxParams& params) {
    require_role(priv, Role::Alice, "alice_message");
    NormalForm s = left_normal_form(priv.secret.word());
    NormalForm s1 = left_normal_form(priv.cosecret.word());
    KxMessage msg;
    msg.transformed.reserve(params.q.size());
    for (const auto& qi : params.q) {
        msg.transformed.push_back(
            nf_multiply(nf_multiply(s, left_normal_form(qi.word())), s1));
    }
    return msg;
}

KxMessage bob_message(const KxPrivate& priv, const KxParams& params) {
    require_role(priv, Role::Bob, "bob_message");
    NormalForm r = left_normal_form(priv.secret.word());
    NormalForm r1 = left_normal_form(priv.cosecret.word());
    KxMessage msg;
    msg.transformed.reserve(params.p.size());
    for (const auto& pi : params.p) {
        msg.transformed.push_back(
            nf_multiply(nf_multiply(r1, left_normal_form(pi.word())), r));
    }
    return msg;
}

SharedSecret alice_shared(const KxPrivate& priv, const KxMessage& msg,
                          const KxParams& params) {
    require_role(priv, Role::Alice, "alice_shared");
    if (msg.transformed.size() != params.p.size()) {
        throw ProtocolCorrupt("message tuple size " + std::to_string(msg.transformed.size()) +
                              " does not match l = " + std::to_string(params.p.size()));
    }
    const auto length = static_cast<int64_t>(priv.seq.size());
    NormalForm value = product_nf(msg.transformed, priv.seq, params.strands);
    value = nf_multiply(value, left_normal_form(priv.cosecret.word()));
    value = shift_delta(value, -2 * static_cast<int64_t>(params.h) * (length - 1));
    if (value.inf() < 0) {
        throw ProtocolCorrupt("shared value left the positive monoid; message inconsistent with params");
    }
    SharedSecret out{std::move(value), {}};
    out.key = sha256(wire::encode_nf(out.value));
    return out;
}

SharedSecret bob_shared(const KxPrivate& priv, const KxMessage& msg,
                        const KxParams& params) {
    require_role(priv, Role::Bob, "bob_shared");
    if (msg.transformed.size() != params.q.size()) {
        throw ProtocolCorrupt("message tuple size " + std::to_string(msg.transformed.size()) +
                              " does not match m = " + std::to_string(params.q.size()));
    }
    const auto length = static_cast<int64_t>(priv.seq.size());
    NormalForm value = product_nf(msg.transformed, priv.seq, params.strands);
    value = nf_multiply(left_normal_form(priv.cosecret.word()), value);
    value = shift_delta(value, -2 * static_cast<int64_t>(params.k) * (length - 1));
    if (value.inf() < 0) {
        throw ProtocolCorrupt("shared value left the positive monoid; message inconsistent with params");
    }
    SharedSecret out{std::move(value), {}};
    out.key = sha256(wire::encode_nf(out.value));
    return out;
}

std::array<uint8_t, 32> derive_session_key(const SharedSecret& secret) {
    return secret.key;
}

}  // namespace braidcrypt::kx
