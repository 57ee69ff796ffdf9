// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace braidcrypt {

namespace {

void check_strands(int strands) {
    if (strands < 2) {
        throw BadParameter("strand count must be at least 2, got " +
                           std::to_string(strands));
    }
    if (strands > 65535) {
        throw BadParameter("strand count too large: " + std::to_string(strands));
    }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<int32_t> letters)
    : strands_(strands), letters_(std::move(letters)) {
    check_strands(strands);
    for (int32_t letter : letters_) {
        int idx = letter < 0 ? -letter : letter;
        if (idx < 1 || idx >= strands_) {
            throw MalformedWord("generator index " + std::to_string(letter) +
                                " out of range for n=" + std::to_string(strands_));
        }
    }
}

bool BraidWord::positive() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](int32_t l) { return l > 0; });
}

PositiveWord::PositiveWord(BraidWord word) : word_(std::move(word)) {
    if (!word_.positive()) {
        throw BadParameter("word contains inverse letters, not in the positive monoid");
    }
}

SimpleBraid SimpleBraid::identity(int strands) {
    check_strands(strands);
    std::vector<uint16_t> perm(static_cast<std::size_t>(strands));
    std::iota(perm.begin(), perm.end(), uint16_t{0});
    return SimpleBraid(strands, std::move(perm));
}

SimpleBraid SimpleBraid::delta(int strands) {
    check_strands(strands);
    std::vector<uint16_t> perm(static_cast<std::size_t>(strands));
    for (int i = 0; i < strands; ++i) {
        perm[static_cast<std::size_t>(i)] = static_cast<uint16_t>(strands - 1 - i);
    }
    return SimpleBraid(strands, std::move(perm));
}

SimpleBraid SimpleBraid::from_table(std::vector<uint16_t> table) {
    int n = static_cast<int>(table.size());
    check_strands(n);
    std::vector<bool> seen(table.size(), false);
    for (uint16_t v : table) {
        if (v >= table.size() || seen[v]) {
            throw BadParameter("permutation table is not a bijection");
        }
        seen[v] = true;
    }
    return SimpleBraid(n, std::move(table));
}

std::vector<uint16_t> SimpleBraid::inverse_table() const {
    std::vector<uint16_t> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        inv[perm_[i]] = static_cast<uint16_t>(i);
    }
    return inv;
}

bool SimpleBraid::is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (perm_[i] != i) return false;
    }
    return true;
}

bool SimpleBraid::is_delta() const {
    std::size_t n = perm_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (perm_[i] != n - 1 - i) return false;
    }
    return true;
}

int SimpleBraid::length() const {
    // Inversion count; n is small, the quadratic scan is fine.
    int count = 0;
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        for (std::size_t j = i + 1; j < perm_.size(); ++j) {
            if (perm_[i] > perm_[j]) ++count;
        }
    }
    return count;
}

void SimpleBraid::push_generator(int g, std::vector<uint16_t>& inv) {
    // Right-multiply by a_g: swap the values g-1 and g (0-based) in the table.
    auto lo = static_cast<uint16_t>(g - 1);
    auto hi = static_cast<uint16_t>(g);
    uint16_t p = inv[lo];
    uint16_t q = inv[hi];
    perm_[p] = hi;
    perm_[q] = lo;
    inv[lo] = q;
    inv[hi] = p;
}

BraidWord parse_word(std::string_view text, int strands) {
    check_strands(strands);
    std::vector<int32_t> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        std::string_view token = text.substr(pos, end - pos);
        int32_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw MalformedWord("bad generator token '" + std::string(token) + "'");
        }
        if (value == 0) {
            throw MalformedWord("generator index must be nonzero");
        }
        int idx = value < 0 ? -value : value;
        if (idx >= strands) {
            throw MalformedWord("generator index " + std::to_string(value) +
                                " out of range for n=" + std::to_string(strands));
        }
        letters.push_back(value);
        pos = end;
    }
    return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord& word) {
    std::string out;
    for (std::size_t i = 0; i < word.letters().size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(word.letters()[i]);
    }
    return out;
}

BraidWord multiply(const BraidWord& lhs, const BraidWord& rhs) {
    if (lhs.strands() != rhs.strands()) {
        throw StrandMismatch("cannot multiply words on " + std::to_string(lhs.strands()) +
                             " and " + std::to_string(rhs.strands()) + " strands");
    }
    std::vector<int32_t> letters = lhs.letters();
    letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
    return BraidWord(lhs.strands(), std::move(letters));
}

PositiveWord multiply(const PositiveWord& lhs, const PositiveWord& rhs) {
    return PositiveWord(multiply(lhs.word(), rhs.word()));
}

BraidWord invert(const BraidWord& word) {
    std::vector<int32_t> letters(word.letters().rbegin(), word.letters().rend());
    for (int32_t& letter : letters) letter = -letter;
    return BraidWord(word.strands(), std::move(letters));
}

PositiveWord fundamental_braid(int strands) {
    check_strands(strands);
    std::vector<int32_t> letters;
    letters.reserve(static_cast<std::size_t>(strands) * (strands - 1) / 2);
    for (int t = 2; t <= strands; ++t) {
        for (int i = t - 1; i >= 1; --i) letters.push_back(i);
    }
    return PositiveWord(strands, std::move(letters));
}

BraidWord tau(const BraidWord& word) {
    int n = word.strands();
    std::vector<int32_t> letters = word.letters();
    for (int32_t& letter : letters) {
        letter = letter > 0 ? n - letter : -(n + letter);
    }
    return BraidWord(n, std::move(letters));
}

PositiveWord tau(const PositiveWord& word) { return PositiveWord(tau(word.word())); }

SimpleBraid tau(const SimpleBraid& simple) {
    // Conjugation by the reversal: table'[i] = n-1 - table[n-1-i].
    int n = simple.strands();
    std::vector<uint16_t> table(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        table[static_cast<std::size_t>(i)] =
            static_cast<uint16_t>(n - 1 - simple.table()[static_cast<std::size_t>(n - 1 - i)]);
    }
    return SimpleBraid::from_table(std::move(table));
}

SimpleBraid word_to_simple(const PositiveWord& word) {
    SimpleBraid simple = SimpleBraid::identity(word.strands());
    std::vector<uint16_t> inv = simple.inverse_table();
    for (int32_t letter : word.letters()) {
        // The strands currently adjacent at positions letter-1, letter may
        // cross at most once; they have not crossed yet exactly when their
        // start order matches their current order.
        if (inv[static_cast<std::size_t>(letter - 1)] >= inv[static_cast<std::size_t>(letter)]) {
            throw NotSimple("strand pair crossed twice; word is not a divisor of Delta");
        }
        simple.push_generator(letter, inv);
    }
    return simple;
}

PositiveWord simple_to_word(const SimpleBraid& simple) {
    int n = simple.strands();
    const auto& perm = simple.table();
    std::vector<int32_t> letters;
    for (int t = 1; t < n; ++t) {
        int before = 0;  // strands j < t ending left of strand t
        for (int j = 0; j < t; ++j) {
            if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(t)]) ++before;
        }
        for (int i = t; i > before; --i) letters.push_back(i);
    }
    return PositiveWord(n, std::move(letters));
}

}  // namespace braidcrypt
