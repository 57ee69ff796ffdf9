// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/pke.hpp"

#include <string>

#include "braidcrypt/rng.hpp"
#include "braidcrypt/sha256.hpp"
#include "braidcrypt/wire.hpp"

namespace braidcrypt::pke {

namespace {

std::vector<int> draw_sequence(SeedStream& stream, std::size_t tuple_size,
                               int length_min, int length_max) {
    const auto length = static_cast<std::size_t>(
        stream.uniform(static_cast<uint64_t>(length_min),
                       static_cast<uint64_t>(length_max)));
    std::vector<int> seq;
    seq.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        seq.push_back(static_cast<int>(stream.uniform(1, tuple_size)));
    }
    return seq;
}

PositiveWord product_of(const std::vector<PositiveWord>& tuple, const std::vector<int>& seq,
                        int strands) {
    PositiveWord out(strands, {});
    for (int idx : seq) out = multiply(out, tuple[static_cast<std::size_t>(idx - 1)]);
    return out;
}

}  // namespace

void PkeParams::validate() const {
    if (strands < 2) throw BadParameter("params: n must be at least 2");
    if (p.empty() || q.empty()) throw BadParameter("params: public tuples must be nonempty");
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

std::pair<PkePublicKey, PkeSecretKey> pke_keygen(const PkeParams& params, int d,
                                                 std::span<const uint8_t> seed) {
    params.validate();
    if (d < 1) throw BadParameter("exponent half d must be >= 1");
    SeedStream stream(seed);
    std::vector<int> seq =
        draw_sequence(stream, params.p.size(), params.length_min, params.length_max);
    PositiveWord s = product_of(params.p, seq, params.strands);
    const int64_t sup = left_normal_form(s.word()).sup();
    if (2 * static_cast<int64_t>(d) < sup) {
        const int min_half = static_cast<int>((sup + 1) / 2);
        throw ExponentTooSmall(
            "d = " + std::to_string(d) + " too small: need 2d >= sup(s) = " + std::to_string(sup) +
                " (least workable d: " + std::to_string(min_half) + ")",
            min_half);
    }
    PositiveWord s1 = complement(s, 2 * static_cast<int64_t>(d));

    NormalForm s_nf = left_normal_form(s.word());
    NormalForm s1_nf = left_normal_form(s1.word());
    PkePublicKey pk{params, d, {}};
    pk.qprime.reserve(params.q.size());
    for (const auto& qi : params.q) {
        pk.qprime.push_back(nf_multiply(nf_multiply(s_nf, left_normal_form(qi.word())), s1_nf));
    }
    PkeSecretKey sk{std::move(seq), std::move(s), std::move(s1)};
    return {std::move(pk), std::move(sk)};
}

Ciphertext pke_encrypt(const PkePublicKey& pk, std::span<const uint8_t> msg,
                       std::span<const uint8_t> seed) {
    pk.params.validate();
    if (pk.qprime.size() != pk.params.q.size()) {
        throw BadParameter("public key qprime tuple size does not match q");
    }
    SeedStream stream(seed);
    std::vector<int> seq = draw_sequence(stream, pk.params.q.size(), pk.params.length_min,
                                         pk.params.length_max);
    PositiveWord r = product_of(pk.params.q, seq, pk.params.strands);
    NormalForm r_nf = left_normal_form(r.word());
    const int64_t margin = static_cast<int64_t>(stream.uniform(0, 2));
    int64_t t = (r_nf.sup() + 1) / 2 + margin;
    if (t < 1) t = 1;
    PositiveWord r1 = complement(r, 2 * t);
    NormalForm r1_nf = left_normal_form(r1.word());

    Ciphertext ct;
    ct.t = static_cast<int>(t);
    ct.Y.reserve(pk.params.p.size());
    for (const auto& pi : pk.params.p) {
        ct.Y.push_back(nf_multiply(nf_multiply(r1_nf, left_normal_form(pi.word())), r_nf));
    }

    NormalForm z = NormalForm::identity(pk.params.strands);
    for (int idx : seq) z = nf_multiply(z, pk.qprime[static_cast<std::size_t>(idx - 1)]);
    z = nf_multiply(r1_nf, z);
    z = shift_delta(z, -2 * static_cast<int64_t>(pk.d) *
                           (static_cast<int64_t>(seq.size()) - 1));
    if (z.inf() < 0) {
        throw BadParameter("public key inconsistent: derived secret left the positive monoid");
    }

    auto [key, stream_bytes] = kdf_and_keystream(ct.Y, z, msg.size());
    (void)key;
    ct.c.resize(msg.size());
    for (std::size_t i = 0; i < msg.size(); ++i) ct.c[i] = msg[i] ^ stream_bytes[i];
    return ct;
}

std::vector<uint8_t> pke_decrypt(const PkeSecretKey& sk, const PkePublicKey& pk,
                                 const Ciphertext& ct) {
    if (ct.Y.size() != pk.params.p.size()) {
        throw CiphertextCorrupt("ciphertext Y tuple size " + std::to_string(ct.Y.size()) +
                                " does not match l = " + std::to_string(pk.params.p.size()));
    }
    if (ct.t < 1) throw CiphertextCorrupt("ciphertext exponent half must be >= 1");
    NormalForm z = NormalForm::identity(pk.params.strands);
    for (int idx : sk.seq) {
        if (idx < 1 || static_cast<std::size_t>(idx) > ct.Y.size()) {
            throw CiphertextCorrupt("secret sequence index out of range for Y");
        }
        z = nf_multiply(z, ct.Y[static_cast<std::size_t>(idx - 1)]);
    }
    z = nf_multiply(z, left_normal_form(sk.s1.word()));
    z = shift_delta(z, -2 * static_cast<int64_t>(ct.t) *
                           (static_cast<int64_t>(sk.seq.size()) - 1));
    if (z.inf() < 0) {
        throw CiphertextCorrupt("derived secret left the positive monoid");
    }
    auto [key, stream_bytes] = kdf_and_keystream(ct.Y, z, ct.c.size());
    (void)key;
    std::vector<uint8_t> msg(ct.c.size());
    for (std::size_t i = 0; i < ct.c.size(); ++i) msg[i] = ct.c[i] ^ stream_bytes[i];
    return msg;
}

namespace {
constexpr char kCiphertextMagic[4] = {'B', 'C', 'T', '1'};
}

std::vector<uint8_t> encode_ciphertext(const Ciphertext& ct) {
    std::vector<uint8_t> out(kCiphertextMagic, kCiphertextMagic + 4);
    for (int i = 3; i >= 0; --i) {
        out.push_back(static_cast<uint8_t>(static_cast<uint32_t>(ct.t) >> (8 * i)));
    }
    auto list = wire::encode_braid_list(ct.Y);
    out.insert(out.end(), list.begin(), list.end());
    out.insert(out.end(), ct.c.begin(), ct.c.end());
    return out;
}

Ciphertext decode_ciphertext(std::span<const uint8_t> bytes) {
    if (bytes.size() < 4) throw Truncated("ciphertext too short for its header");
    for (int i = 0; i < 4; ++i) {
        if (static_cast<char>(bytes[static_cast<std::size_t>(i)]) != kCiphertextMagic[i]) {
            throw BadMagic("ciphertext does not start with BCT1");
        }
    }
    if (bytes.size() < 12) throw Truncated("ciphertext too short for t and the braid list");
    Ciphertext ct;
    uint32_t t = 0;
    for (int i = 4; i < 8; ++i) t = t << 8 | bytes[static_cast<std::size_t>(i)];
    ct.t = static_cast<int>(t);
    std::size_t pos = 8;
    uint32_t count = 0;
    for (int i = 0; i < 4; ++i) count = count << 8 | bytes[pos + static_cast<std::size_t>(i)];
    pos += 4;
    for (uint32_t i = 0; i < count; ++i) {
        // each entry: 14-byte fixed part, then r tables of n bytes
        if (bytes.size() < pos + 14) throw Truncated("ciphertext braid entry truncated");
        auto n = static_cast<std::size_t>(bytes[pos + 4] << 8 | bytes[pos + 5]);
        uint32_t r = 0;
        for (int b = 0; b < 4; ++b) r = r << 8 | bytes[pos + 10 + static_cast<std::size_t>(b)];
        std::size_t entry_size = 14 + static_cast<std::size_t>(r) * n;
        if (bytes.size() < pos + entry_size) throw Truncated("ciphertext braid entry truncated");
        ct.Y.push_back(wire::decode_nf(bytes.subspan(pos, entry_size)));
        pos += entry_size;
    }
    ct.c.assign(bytes.begin() + static_cast<long>(pos), bytes.end());
    return ct;
}

std::pair<std::array<uint8_t, 32>, std::vector<uint8_t>> kdf_and_keystream(
    std::span<const NormalForm> Y, const NormalForm& Z, std::size_t length) {
    std::vector<uint8_t> preimage = wire::encode_braid_list(Y);
    auto z_enc = wire::encode_nf(Z);
    preimage.insert(preimage.end(), z_enc.begin(), z_enc.end());
    std::array<uint8_t, 32> key = sha256(preimage);

    std::vector<uint8_t> stream;
    stream.reserve(length + 31);
    uint64_t block = 0;
    while (stream.size() < length) {
        uint8_t suffix[8];
        for (int i = 0; i < 8; ++i) suffix[i] = static_cast<uint8_t>(block >> (56 - 8 * i));
        Digest chunk = sha256_concat({std::span<const uint8_t>(key),
                                      std::span<const uint8_t>(suffix, 8)});
        stream.insert(stream.end(), chunk.begin(), chunk.end());
        ++block;
    }
    stream.resize(length);
    return {key, std::move(stream)};
}

}  // namespace braidcrypt::pke
