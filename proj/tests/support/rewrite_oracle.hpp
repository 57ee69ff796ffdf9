// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0
//
// Test-only word-problem oracles. Everything here works on raw letter
// vectors (+i for a_i, -i for its inverse) by breadth-first rewriting, with
// no dependency on the library under test.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

/// Every positive word obtainable from `w` by the braid and commutation
/// relations (applied as subword rewrites, both directions). Relations
/// preserve length, so the closure is finite.
std::vector<Word> positive_class(const Word& w, int strands);

/// Positive-monoid equality: none of the moves changes length, so unequal
/// lengths are never equal and the closure decides the rest exactly.
bool positive_words_equal(const Word& a, const Word& b, int strands);

/// Class ids for all positive words of length <= maxlen, same id iff equal.
std::map<Word, int> positive_partition(int strands, int maxlen);

/// Group-level equality of two small signed words by bounded bidirectional
/// BFS over free reduction/insertion plus the relation in all sign-derived
/// triple forms. Sound always; complete when the connecting chain stays
/// within `cap` letters (generous caps are cheap at unit-test sizes).
bool signed_words_equal_bfs(const Word& a, const Word& b, int strands, int cap,
                            std::size_t max_nodes = 2'000'000);

/// Connected components of the rewriting graph over all signed words of
/// length <= cap on `strands` strands. Edges: free reduction (which, read
/// backwards, is free insertion), the braid relation in its six sign-derived
/// triple forms, and far commutation in all sign combinations. Two words of
/// length <= maxlen get the same id iff they are connected within the cap.
class SignedClasses {
  public:
    SignedClasses(int strands, int cap);

    uint32_t component(const Word& w) const;
    std::size_t size() const { return parent_.size(); }

  private:
    std::size_t index_of(const Word& w) const;
    std::size_t find(std::size_t x);
    void unite(std::size_t x, std::size_t y);

    int strands_;
    int alphabet_;
    int cap_;
    std::vector<uint64_t> offset_;       // first index of each length stratum
    mutable std::vector<uint32_t> parent_;
};

}  // namespace oracle
