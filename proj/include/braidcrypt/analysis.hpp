// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "braidcrypt/garside.hpp"

namespace braidcrypt::analysis {

/// Exchange decomposition instance: find positive s, t with s*t = U and
/// t*s = V.
struct EdpInstance {
    PositiveWord U;
    PositiveWord V;
    std::optional<std::pair<PositiveWord, PositiveWord>> planted;
};

/// Conjugacy search instance: find s with y = s x s^{-1}.
struct CspInstance {
    BraidWord x;
    BraidWord y;
    std::optional<BraidWord> planted;
};

/// All positive solutions (s, t) with letter count |s| <= maxlen, as
/// canonical words, deduplicated by normal form and sorted lexicographically
/// by (s, t). Positive letter count is invariant under the relations, so
/// |t| = |U| - |s| is forced and unequal |U|, |V| mean no solutions.
std::vector<std::pair<PositiveWord, PositiveWord>> edp_bruteforce(const EdpInstance& inst,
                                                                  int maxlen);

/// All conjugators s over the signed alphabet with |s| <= maxlen, as
/// canonical words, deduplicated by normal form, sorted canonically.
std::vector<BraidWord> csp_bruteforce(const CspInstance& inst, int maxlen);

/// A decomposition solver at group level: given (U, V) returns candidate
/// pairs (s, c) meant to satisfy s*c = U and c*s = V.
using EdpSolver =
    std::function<std::vector<std::pair<BraidWord, BraidWord>>(const BraidWord& U,
                                                               const BraidWord& V)>;

/// A conjugacy solver: given (x, y) returns candidate s with y = s x s^{-1}.
using CspSolver =
    std::function<std::vector<BraidWord>(const BraidWord& x, const BraidWord& y)>;

/// Group-level decomposition by brute force over signed s with |s| <= maxlen:
/// c := s^{-1} U always satisfies s*c = U, keep those with c*s = V.
std::vector<std::pair<BraidWord, BraidWord>> group_edp_bruteforce(const BraidWord& U,
                                                                  const BraidWord& V,
                                                                  int maxlen);

/// Solves conjugacy through a decomposition solver (U = y, V = x): a verified
/// answer (s, c) has c = x s^{-1}, hence y = s x s^{-1}. Throws
/// ReductionFailed when the solver yields nothing that verifies.
BraidWord csp_to_edp(const CspInstance& inst, const EdpSolver& solver);

/// Solves decomposition through a conjugacy solver: a conjugator t with
/// V = t U t^{-1} gives s = U t^{-1}; both defining products are re-verified.
std::pair<BraidWord, BraidWord> edp_to_csp(const EdpInstance& inst, const CspSolver& solver);

/// Adapter: the positive-monoid brute-force solver as an EdpSolver. The
/// inputs must be positive words.
EdpSolver make_edp_bruteforce_solver(int maxlen);

/// Adapter: csp_bruteforce as a CspSolver.
CspSolver make_csp_bruteforce_solver(int maxlen);

/// Random positive s, t of the given letter counts; U = s*t, V = t*s.
EdpInstance generate_planted_edp(int strands, int len_s, int len_t,
                                 std::span<const uint8_t> seed);

}  // namespace braidcrypt::analysis
