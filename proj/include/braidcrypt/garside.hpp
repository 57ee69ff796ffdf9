// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidcrypt/braid.hpp"

namespace braidcrypt {

/// Left normal form Delta^inf s_1 ... s_r of a braid.
///
/// Invariants, enforced on construction: every factor is a permutation braid
/// distinct from e and Delta, and every adjacent pair is left-weighted (the
/// starting set of the right factor is contained in the finishing set of the
/// left one). Two words represent the same element of B_n exactly when their
/// normal forms compare equal component-wise. inf >= 0 iff the element lies
/// in the positive monoid.
class NormalForm {
  public:
    /// Validates all invariants; throws InvalidNormalForm on violation.
    NormalForm(int strands, int64_t inf, std::vector<SimpleBraid> factors);

    /// Normal form of Delta^power (identity when power = 0).
    static NormalForm delta_power(int strands, int64_t power);
    static NormalForm identity(int strands) { return delta_power(strands, 0); }

    int strands() const { return strands_; }
    int64_t inf() const { return inf_; }
    int64_t sup() const { return inf_ + static_cast<int64_t>(factors_.size()); }
    int canonical_length() const { return static_cast<int>(factors_.size()); }
    const std::vector<SimpleBraid>& factors() const { return factors_; }
    bool positive() const { return inf_ >= 0; }

    /// Canonical word: Delta^inf followed by each factor's canonical word.
    BraidWord word() const;
    /// Same, as a PositiveWord; requires inf >= 0.
    PositiveWord positive_word() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

  private:
    int strands_;
    int64_t inf_;
    std::vector<SimpleBraid> factors_;
};

/// Greatest common left-divisor of two permutation braids (the lattice meet
/// under left-divisibility).
SimpleBraid simple_meet(const SimpleBraid& a, const SimpleBraid& b);

/// The permutation braid completing `a` to the half twist: a * result = Delta.
SimpleBraid right_complement(const SimpleBraid& a);

/// True when no generator can move from the head of `b` to the tail of `a`
/// with both staying simple.
bool pair_left_weighted(const SimpleBraid& a, const SimpleBraid& b);

/// Left normal form of an arbitrary word. Inverse letters are rewritten as
/// Delta^{-1} times the simple complement and the Delta powers migrate to
/// the front through the flip automorphism.
NormalForm left_normal_form(const BraidWord& word);

/// Equality in B_n: identical normal forms.
bool words_equal(const BraidWord& lhs, const BraidWord& rhs);

NormalForm nf_multiply(const NormalForm& x, const NormalForm& y);

NormalForm nf_invert(const NormalForm& x);

/// Delta^e * x for even e (central by the square of the half twist);
/// odd e throws OddShiftUnsupported.
NormalForm shift_delta(const NormalForm& x, int64_t e);

/// The positive braid y with x*y = Delta^m, for m >= sup(x); smaller m
/// throws ComplementTooSmall. Returned as the canonical word of its
/// normal form.
PositiveWord complement(const PositiveWord& x, int64_t m);

struct InfSup {
    int64_t inf;
    int64_t sup;
    int canonical_length;
};

InfSup inf_sup(const NormalForm& x);

/// "D^k | w1 | w2 | ..." with each factor as its canonical positive word.
std::string pretty(const NormalForm& x);

}  // namespace braidcrypt
