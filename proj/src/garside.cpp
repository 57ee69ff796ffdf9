// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/garside.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <utility>

namespace braidcrypt {

namespace {

constexpr std::size_t kNil = std::numeric_limits<std::size_t>::max();

std::vector<uint16_t> identity_table(int n) {
    std::vector<uint16_t> t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), uint16_t{0});
    return t;
}

std::vector<uint16_t> right_complement_table(const SimpleBraid& a) {
    // a * rc = Delta, so rc = reversal composed after a^{-1}.
    const int n = a.strands();
    std::vector<uint16_t> inv = a.inverse_table();
    std::vector<uint16_t> rc(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        rc[static_cast<std::size_t>(x)] =
            static_cast<uint16_t>(n - 1 - inv[static_cast<std::size_t>(x)]);
    }
    return rc;
}

// Makes the pair (a, b) left-weighted in place: t = rc(a) /\ b moves from the
// head of b to the tail of a. Returns whether anything moved. The peeled
// remainder of b is exactly t^{-1} b, so the loop's exit condition (no common
// descent of the two remainders) is the left-weightedness of the new pair.
bool left_weight_pair(SimpleBraid& a, SimpleBraid& b) {
    const int n = a.strands();
    if (b.is_identity() || a.is_delta()) return false;

    std::vector<uint16_t> rd = right_complement_table(a);
    std::vector<uint16_t> rb = b.table();

    SimpleBraid t = SimpleBraid::identity(n);
    std::vector<uint16_t> t_inv = identity_table(n);
    bool any = false;
    bool found = true;
    while (found) {
        found = false;
        for (int i = 0; i + 1 < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            if (rd[ui] > rd[ui + 1] && rb[ui] > rb[ui + 1]) {
                // a_{i+1} divides both remainders: peel it onto t.
                std::swap(rd[ui], rd[ui + 1]);
                std::swap(rb[ui], rb[ui + 1]);
                t.push_generator(i + 1, t_inv);
                any = found = true;
            }
        }
    }
    if (!any) return false;

    std::vector<uint16_t> at(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        at[static_cast<std::size_t>(x)] = t.table()[a.table()[static_cast<std::size_t>(x)]];
    }
    a = SimpleBraid::from_table(std::move(at));
    b = SimpleBraid::from_table(std::move(rb));
    return true;
}

// Worklist normalizer over a slot-linked factor list. Each processed pair is
// left-weighted by a single local move; neighbours of anything that changed
// are re-queued, so an empty worklist means every alive pair is left-weighted.
// Identity factors are unlinked; Deltas bubble to the front on their own
// (a pair (x, Delta) with x != Delta is never left-weighted) and are folded
// into `inf` during collection.
void normalize_factors(int64_t& inf, std::vector<SimpleBraid>& factors,
                       bool seed_all, std::size_t seed_pair) {
    const std::size_t m = factors.size();
    if (m == 0) return;

    std::vector<std::size_t> next(m), prev(m);
    std::vector<bool> alive(m, true);
    std::size_t head = kNil, tail = kNil;
    for (std::size_t i = 0; i < m; ++i) {
        if (factors[i].is_identity()) {
            alive[i] = false;
            continue;
        }
        prev[i] = tail;
        next[i] = kNil;
        if (tail != kNil) {
            next[tail] = i;
        } else {
            head = i;
        }
        tail = i;
    }

    std::vector<std::size_t> stack;
    std::vector<bool> queued(m, false);
    auto push = [&](std::size_t u) {
        if (u != kNil && alive[u] && !queued[u]) {
            queued[u] = true;
            stack.push_back(u);
        }
    };
    auto unlink = [&](std::size_t u) {
        alive[u] = false;
        std::size_t p = prev[u], q = next[u];
        if (p != kNil) next[p] = q; else head = q;
        if (q != kNil) prev[q] = p; else tail = p;
    };

    if (seed_all) {
        for (std::size_t u = head; u != kNil; u = next[u]) push(u);
    } else if (seed_pair < m && alive[seed_pair]) {
        push(seed_pair);
    }

    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        queued[u] = false;
        if (!alive[u]) continue;
        std::size_t v = next[u];
        if (v == kNil) continue;
        if (!left_weight_pair(factors[u], factors[v])) continue;
        if (factors[v].is_identity()) unlink(v);
        push(prev[u]);
        push(u);
        push(v);
    }

    std::vector<SimpleBraid> out;
    std::size_t u = head;
    while (u != kNil && factors[u].is_delta()) {
        ++inf;
        u = next[u];
    }
    for (; u != kNil; u = next[u]) out.push_back(std::move(factors[u]));
    factors = std::move(out);
}

// Word -> Delta power and simple factors, greedily packing consecutive
// positive letters while the product stays simple. An inverse letter a_g^{-1}
// becomes Delta^{-1} times the simple with table x -> swap_{g-1,g}(n-1-x),
// flipping the accumulated factors through tau on the way.
void decompose_word(const BraidWord& word, int64_t& inf,
                    std::vector<SimpleBraid>& factors) {
    const int n = word.strands();
    inf = 0;
    factors.clear();
    std::vector<uint16_t> last_inv;
    bool have_last = false;

    for (int32_t letter : word.letters()) {
        if (letter > 0) {
            int g = letter;
            bool extend = have_last &&
                          last_inv[static_cast<std::size_t>(g - 1)] <
                              last_inv[static_cast<std::size_t>(g)];
            if (!extend) {
                factors.push_back(SimpleBraid::identity(n));
                last_inv = identity_table(n);
                have_last = true;
            }
            factors.back().push_generator(g, last_inv);
        } else {
            int g = -letter;
            inf -= 1;
            for (auto& f : factors) f = tau(f);
            std::vector<uint16_t> table(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) {
                int v = n - 1 - x;
                if (v == g - 1) v = g;
                else if (v == g) v = g - 1;
                table[static_cast<std::size_t>(x)] = static_cast<uint16_t>(v);
            }
            factors.push_back(SimpleBraid::from_table(std::move(table)));
            last_inv = factors.back().inverse_table();
            have_last = true;
        }
    }
}

void check_same_strands(int lhs, int rhs) {
    if (lhs != rhs) {
        throw StrandMismatch("operands live on " + std::to_string(lhs) + " and " +
                             std::to_string(rhs) + " strands");
    }
}

}  // namespace

NormalForm::NormalForm(int strands, int64_t inf, std::vector<SimpleBraid> factors)
    : strands_(strands), inf_(inf), factors_(std::move(factors)) {
    if (strands_ < 2) throw InvalidNormalForm("strand count must be at least 2");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].strands() != strands_) {
            throw InvalidNormalForm("factor strand count mismatch");
        }
        if (factors_[i].is_identity()) {
            throw InvalidNormalForm("identity factor in normal form");
        }
        if (factors_[i].is_delta()) {
            throw InvalidNormalForm("Delta factor not absorbed into inf");
        }
        if (i > 0 && !pair_left_weighted(factors_[i - 1], factors_[i])) {
            throw InvalidNormalForm("adjacent factors are not left-weighted");
        }
    }
}

NormalForm NormalForm::delta_power(int strands, int64_t power) {
    return NormalForm(strands, power, {});
}

BraidWord NormalForm::word() const {
    const BraidWord delta_word = fundamental_braid(strands_).word();
    BraidWord out(strands_);
    if (inf_ >= 0) {
        for (int64_t i = 0; i < inf_; ++i) out = multiply(out, delta_word);
    } else {
        const BraidWord delta_inv = invert(delta_word);
        for (int64_t i = 0; i < -inf_; ++i) out = multiply(out, delta_inv);
    }
    for (const auto& f : factors_) out = multiply(out, simple_to_word(f).word());
    return out;
}

PositiveWord NormalForm::positive_word() const {
    if (inf_ < 0) {
        throw BadParameter("normal form has negative inf, not a positive braid");
    }
    return PositiveWord(word());
}

SimpleBraid simple_meet(const SimpleBraid& a, const SimpleBraid& b) {
    check_same_strands(a.strands(), b.strands());
    const int n = a.strands();
    std::vector<uint16_t> ra = a.table();
    std::vector<uint16_t> rb = b.table();
    SimpleBraid meet = SimpleBraid::identity(n);
    std::vector<uint16_t> meet_inv = identity_table(n);
    bool found = true;
    while (found) {
        found = false;
        for (int i = 0; i + 1 < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            if (ra[ui] > ra[ui + 1] && rb[ui] > rb[ui + 1]) {
                std::swap(ra[ui], ra[ui + 1]);
                std::swap(rb[ui], rb[ui + 1]);
                meet.push_generator(i + 1, meet_inv);
                found = true;
            }
        }
    }
    return meet;
}

SimpleBraid right_complement(const SimpleBraid& a) {
    return SimpleBraid::from_table(right_complement_table(a));
}

bool pair_left_weighted(const SimpleBraid& a, const SimpleBraid& b) {
    check_same_strands(a.strands(), b.strands());
    const int n = a.strands();
    const auto& bt = b.table();
    std::vector<uint16_t> ainv = a.inverse_table();
    for (int i = 0; i + 1 < n; ++i) {
        auto ui = static_cast<std::size_t>(i);
        if (bt[ui] > bt[ui + 1] && !(ainv[ui] > ainv[ui + 1])) return false;
    }
    return true;
}

NormalForm left_normal_form(const BraidWord& word) {
    int64_t inf = 0;
    std::vector<SimpleBraid> factors;
    decompose_word(word, inf, factors);
    normalize_factors(inf, factors, /*seed_all=*/true, 0);
    return NormalForm(word.strands(), inf, std::move(factors));
}

bool words_equal(const BraidWord& lhs, const BraidWord& rhs) {
    check_same_strands(lhs.strands(), rhs.strands());
    return left_normal_form(lhs) == left_normal_form(rhs);
}

NormalForm nf_multiply(const NormalForm& x, const NormalForm& y) {
    check_same_strands(x.strands(), y.strands());
    int64_t inf = x.inf() + y.inf();
    std::vector<SimpleBraid> factors;
    factors.reserve(x.factors().size() + y.factors().size());
    const bool flip = (y.inf() % 2) != 0;
    for (const auto& f : x.factors()) factors.push_back(flip ? tau(f) : f);
    for (const auto& f : y.factors()) factors.push_back(f);
    if (!x.factors().empty() && !y.factors().empty()) {
        normalize_factors(inf, factors, /*seed_all=*/false, x.factors().size() - 1);
    }
    return NormalForm(x.strands(), inf, std::move(factors));
}

NormalForm nf_invert(const NormalForm& x) {
    // (Delta^k f_1..f_r)^{-1} = Delta^{-(k+r)} tau^{k+r}(rc(f_r)) ... tau^{k+1}(rc(f_1))
    const int64_t k = x.inf();
    const auto r = static_cast<int64_t>(x.factors().size());
    int64_t inf = -(k + r);
    std::vector<SimpleBraid> factors;
    factors.reserve(x.factors().size());
    for (int64_t j = r; j >= 1; --j) {
        SimpleBraid f = right_complement(x.factors()[static_cast<std::size_t>(j - 1)]);
        if (((k + j) % 2) != 0) f = tau(f);
        factors.push_back(std::move(f));
    }
    normalize_factors(inf, factors, /*seed_all=*/true, 0);
    return NormalForm(x.strands(), inf, std::move(factors));
}

NormalForm shift_delta(const NormalForm& x, int64_t e) {
    if (e % 2 != 0) {
        throw OddShiftUnsupported("shift_delta requires an even Delta power, got " +
                                  std::to_string(e));
    }
    return NormalForm(x.strands(), x.inf() + e, x.factors());
}

PositiveWord complement(const PositiveWord& x, int64_t m) {
    NormalForm nf = left_normal_form(x.word());
    if (m < nf.sup()) {
        throw ComplementTooSmall("no positive complement: need m >= sup(x) = " +
                                 std::to_string(nf.sup()) + ", got " + std::to_string(m));
    }
    NormalForm result = nf_multiply(nf_invert(nf), NormalForm::delta_power(x.strands(), m));
    return result.positive_word();
}

InfSup inf_sup(const NormalForm& x) {
    return InfSup{x.inf(), x.sup(), x.canonical_length()};
}

std::string pretty(const NormalForm& x) {
    std::string out = "D^" + std::to_string(x.inf());
    for (const auto& f : x.factors()) {
        out += " | ";
        out += format_word(simple_to_word(f).word());
    }
    return out;
}

}  // namespace braidcrypt
