// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/wire.hpp"

#include <limits>

#include "braidcrypt/errors.hpp"

namespace braidcrypt::wire {

namespace {

constexpr char kMagic[4] = {'B', 'R', 'D', '1'};

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

struct Cursor {
    std::span<const uint8_t> data;
    std::size_t pos = 0;

    void need(std::size_t count) const {
        if (pos + count > data.size()) {
            throw Truncated("encoded braid ends after " + std::to_string(data.size()) +
                            " bytes, needed " + std::to_string(pos + count));
        }
    }
    uint8_t u8() {
        need(1);
        return data[pos++];
    }
    uint16_t u16() {
        need(2);
        uint16_t v = static_cast<uint16_t>(data[pos] << 8 | data[pos + 1]);
        pos += 2;
        return v;
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = v << 8 | data[pos + static_cast<std::size_t>(i)];
        pos += 4;
        return v;
    }
};

NormalForm read_nf(Cursor& cur) {
    cur.need(4);
    for (char expected : kMagic) {
        if (static_cast<char>(cur.data[cur.pos]) != expected) {
            throw BadMagic("encoded braid does not start with BRD1");
        }
        ++cur.pos;
    }
    uint16_t n = cur.u16();
    auto inf = static_cast<int32_t>(cur.u32());
    uint32_t r = cur.u32();
    if (n < 2) throw InvalidNormalForm("strand count below 2");
    std::vector<SimpleBraid> factors;
    factors.reserve(r);
    for (uint32_t k = 0; k < r; ++k) {
        std::vector<uint16_t> table(n);
        for (uint16_t i = 0; i < n; ++i) {
            uint8_t v = cur.u8();
            if (v < 1 || v > n) {
                throw InvalidNormalForm("permutation entry out of range");
            }
            table[i] = static_cast<uint16_t>(v - 1);
        }
        try {
            factors.push_back(SimpleBraid::from_table(std::move(table)));
        } catch (const BadParameter& e) {
            throw InvalidNormalForm(e.what());
        }
    }
    // The NormalForm constructor re-checks e/Delta exclusion and
    // left-weightedness.
    return NormalForm(n, inf, std::move(factors));
}

}  // namespace

std::vector<uint8_t> encode_nf(const NormalForm& x) {
    if (x.strands() > 255) {
        throw EncodingOverflow("wire format stores one byte per permutation entry; n = " +
                               std::to_string(x.strands()) + " exceeds 255");
    }
    if (x.inf() < std::numeric_limits<int32_t>::min() ||
        x.inf() > std::numeric_limits<int32_t>::max()) {
        throw EncodingOverflow("inf does not fit in 32 bits");
    }
    std::vector<uint8_t> out;
    out.reserve(14 + x.factors().size() * static_cast<std::size_t>(x.strands()));
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u16(out, static_cast<uint16_t>(x.strands()));
    put_u32(out, static_cast<uint32_t>(static_cast<int32_t>(x.inf())));
    put_u32(out, static_cast<uint32_t>(x.factors().size()));
    for (const auto& f : x.factors()) {
        for (uint16_t v : f.table()) out.push_back(static_cast<uint8_t>(v + 1));
    }
    return out;
}

NormalForm decode_nf(std::span<const uint8_t> bytes) {
    Cursor cur{bytes};
    NormalForm nf = read_nf(cur);
    if (cur.pos != bytes.size()) {
        throw InvalidNormalForm("trailing bytes after encoded braid");
    }
    return nf;
}

std::vector<uint8_t> encode_braid_list(std::span<const NormalForm> braids) {
    if (braids.size() > std::numeric_limits<uint32_t>::max()) {
        throw EncodingOverflow("braid list too long");
    }
    std::vector<uint8_t> out;
    put_u32(out, static_cast<uint32_t>(braids.size()));
    for (const auto& b : braids) {
        auto enc = encode_nf(b);
        out.insert(out.end(), enc.begin(), enc.end());
    }
    return out;
}

std::vector<NormalForm> decode_braid_list(std::span<const uint8_t> bytes) {
    Cursor cur{bytes};
    uint32_t count = cur.u32();
    std::vector<NormalForm> out;
    out.reserve(count);
    for (uint32_t i = 0; i < count; ++i) out.push_back(read_nf(cur));
    if (cur.pos != bytes.size()) {
        throw InvalidNormalForm("trailing bytes after braid list");
    }
    return out;
}

std::vector<uint8_t> encode_frame(const Frame& frame) {
    if (frame.payload.size() + 1 > kMaxFrameBytes) {
        throw EncodingOverflow("frame payload exceeds 16 MiB");
    }
    std::vector<uint8_t> out;
    out.reserve(5 + frame.payload.size());
    put_u32(out, static_cast<uint32_t>(1 + frame.payload.size()));
    out.push_back(frame.type);
    out.insert(out.end(), frame.payload.begin(), frame.payload.end());
    return out;
}

Frame decode_frame(std::span<const uint8_t> bytes, std::size_t& consumed) {
    Cursor cur{bytes};
    uint32_t length = cur.u32();
    if (length == 0) throw InvalidNormalForm("frame length field must cover the type byte");
    if (length > kMaxFrameBytes) throw EncodingOverflow("frame exceeds 16 MiB");
    cur.need(length);
    Frame frame;
    frame.type = cur.u8();
    frame.payload.assign(bytes.begin() + 5, bytes.begin() + 4 + length);
    consumed = 4 + static_cast<std::size_t>(length);
    return frame;
}

namespace {
constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}

std::string to_base64(std::span<const uint8_t> data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        uint32_t v = static_cast<uint32_t>(data[i]) << 16 |
                     static_cast<uint32_t>(data[i + 1]) << 8 | data[i + 2];
        out.push_back(kB64Alphabet[v >> 18 & 0x3f]);
        out.push_back(kB64Alphabet[v >> 12 & 0x3f]);
        out.push_back(kB64Alphabet[v >> 6 & 0x3f]);
        out.push_back(kB64Alphabet[v & 0x3f]);
    }
    if (i + 1 == data.size()) {
        uint32_t v = static_cast<uint32_t>(data[i]) << 16;
        out.push_back(kB64Alphabet[v >> 18 & 0x3f]);
        out.push_back(kB64Alphabet[v >> 12 & 0x3f]);
        out.push_back('=');
        out.push_back('=');
    } else if (i + 2 == data.size()) {
        uint32_t v = static_cast<uint32_t>(data[i]) << 16 |
                     static_cast<uint32_t>(data[i + 1]) << 8;
        out.push_back(kB64Alphabet[v >> 18 & 0x3f]);
        out.push_back(kB64Alphabet[v >> 12 & 0x3f]);
        out.push_back(kB64Alphabet[v >> 6 & 0x3f]);
        out.push_back('=');
    }
    return out;
}

std::vector<uint8_t> from_base64(std::string_view text) {
    auto value_of = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::vector<uint8_t> out;
    uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
        if (c == '=') break;
        int v = value_of(c);
        if (v < 0) throw BadParameter("invalid base64 character");
        acc = acc << 6 | static_cast<uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<uint8_t>(acc >> bits));
        }
    }
    return out;
}

}  // namespace braidcrypt::wire
