// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidcrypt/errors.hpp"

namespace braidcrypt {

/// A word over the Artin generators of the n-strand braid group.
///
/// Letters are signed integers: +i stands for the generator a_i, -i for its
/// inverse, with 1 <= i <= n-1. The empty word is the identity e. Words are
/// immutable values; equality of the underlying group elements is decided by
/// the garside module, not here.
class BraidWord {
  public:
    /// Identity word on n strands.
    explicit BraidWord(int strands);
    BraidWord(int strands, std::vector<int32_t> letters);

    int strands() const { return strands_; }
    const std::vector<int32_t>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool positive() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

  private:
    int strands_;
    std::vector<int32_t> letters_;
};

/// A braid word with no inverse letters: an element of the positive monoid.
/// Closed under concatenation; the invariant is checked on construction.
class PositiveWord {
  public:
    explicit PositiveWord(BraidWord word);
    PositiveWord(int strands, std::vector<int32_t> letters)
        : PositiveWord(BraidWord(strands, std::move(letters))) {}

    const BraidWord& word() const { return word_; }
    operator const BraidWord&() const { return word_; }
    int strands() const { return word_.strands(); }
    const std::vector<int32_t>& letters() const { return word_.letters(); }
    std::size_t size() const { return word_.size(); }

    friend bool operator==(const PositiveWord&, const PositiveWord&) = default;

  private:
    BraidWord word_;
};

/// A permutation braid: a positive left-divisor of the fundamental braid,
/// stored as its permutation table. table()[i] is the 0-based final position
/// of the strand starting at 0-based position i; generators compose left to
/// right.
class SimpleBraid {
  public:
    static SimpleBraid identity(int strands);
    /// The half twist: the reversal permutation i -> n+1-i.
    static SimpleBraid delta(int strands);
    /// Validates that `table` is a bijection on {0..n-1}.
    static SimpleBraid from_table(std::vector<uint16_t> table);

    int strands() const { return strands_; }
    const std::vector<uint16_t>& table() const { return perm_; }
    std::vector<uint16_t> inverse_table() const;

    bool is_identity() const;
    bool is_delta() const;
    /// Inversion count: the letter length of any positive word for this braid.
    int length() const;

    friend bool operator==(const SimpleBraid&, const SimpleBraid&) = default;

    // In-place right multiplication by a_g (g is 1-based); `inv` must be the
    // current inverse table and is kept in sync. No simplicity check.
    void push_generator(int g, std::vector<uint16_t>& inv);

  private:
    SimpleBraid(int strands, std::vector<uint16_t> perm)
        : strands_(strands), perm_(std::move(perm)) {}

    int strands_;
    std::vector<uint16_t> perm_;
};

/// Parses whitespace-separated signed generator indices ("1 -2 3").
/// The empty (or all-blank) string is the identity.
BraidWord parse_word(std::string_view text, int strands);

/// Exact inverse of parse_word.
std::string format_word(const BraidWord& word);

/// Concatenation. No rewriting of any kind is performed.
BraidWord multiply(const BraidWord& lhs, const BraidWord& rhs);
PositiveWord multiply(const PositiveWord& lhs, const PositiveWord& rhs);

/// Free inverse: letters reversed, signs flipped.
BraidWord invert(const BraidWord& word);

/// The fundamental braid as its canonical positive word
/// a_1 | a_2 a_1 | ... | a_{n-1} ... a_1, of length n(n-1)/2.
PositiveWord fundamental_braid(int strands);

/// The flip automorphism x -> Delta^{-1} x Delta: every letter a_i^{+-1}
/// becomes a_{n-i}^{+-1}. Involutive; preserves positivity and length.
BraidWord tau(const BraidWord& word);
PositiveWord tau(const PositiveWord& word);
SimpleBraid tau(const SimpleBraid& simple);

/// Interprets a positive word as a permutation braid. Throws NotSimple if
/// some strand pair would cross twice.
SimpleBraid word_to_simple(const PositiveWord& word);

/// Canonical positive word of a permutation braid: descending runs
/// a_j a_{j-1} ... per strand insertion order, so delta(n) maps back to
/// fundamental_braid(n) exactly. Length equals the inversion count.
PositiveWord simple_to_word(const SimpleBraid& simple);

}  // namespace braidcrypt
