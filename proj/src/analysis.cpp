// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0

#include "braidcrypt/analysis.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "braidcrypt/rng.hpp"
#include "braidcrypt/wire.hpp"

namespace braidcrypt::analysis {

namespace {

std::string nf_key(const NormalForm& nf) {
    auto enc = wire::encode_nf(nf);
    return std::string(enc.begin(), enc.end());
}

// Canonical representatives (as canonical words) of all distinct positive
// braids with letter count <= maxlen, grouped by length. Words of length L
// come from length L-1 representatives extended by one generator, which
// reaches every class since rewriting never changes length.
std::vector<std::vector<BraidWord>> positive_representatives(int strands, int maxlen) {
    std::vector<std::vector<BraidWord>> by_length;
    std::unordered_set<std::string> seen;
    by_length.push_back({BraidWord(strands)});
    seen.insert(nf_key(NormalForm::identity(strands)));
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<BraidWord> current;
        for (const BraidWord& shorter : by_length.back()) {
            for (int g = 1; g < strands; ++g) {
                std::vector<int32_t> letters = shorter.letters();
                letters.push_back(g);
                BraidWord candidate(strands, std::move(letters));
                NormalForm nf = left_normal_form(candidate);
                if (seen.insert(nf_key(nf)).second) {
                    current.push_back(nf.word());
                }
            }
        }
        by_length.push_back(std::move(current));
    }
    return by_length;
}

// Distinct group elements with a signed word of length <= maxlen, as
// canonical words.
std::vector<BraidWord> signed_representatives(int strands, int maxlen) {
    std::vector<BraidWord> reps{BraidWord(strands)};
    std::unordered_set<std::string> seen{nf_key(NormalForm::identity(strands))};
    std::vector<BraidWord> frontier = reps;
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<BraidWord> next;
        for (const BraidWord& shorter : frontier) {
            for (int g = 1; g < strands; ++g) {
                for (int sign : {1, -1}) {
                    std::vector<int32_t> letters = shorter.letters();
                    letters.push_back(sign * g);
                    BraidWord candidate(strands, std::move(letters));
                    NormalForm nf = left_normal_form(candidate);
                    if (seen.insert(nf_key(nf)).second) {
                        BraidWord rep = nf.word();
                        reps.push_back(rep);
                        next.push_back(std::move(rep));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return reps;
}

bool word_less(const BraidWord& a, const BraidWord& b) {
    return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                        b.letters().begin(), b.letters().end());
}

}  // namespace

std::vector<std::pair<PositiveWord, PositiveWord>> edp_bruteforce(const EdpInstance& inst,
                                                                  int maxlen) {
    if (maxlen < 0) throw BadParameter("maxlen must be nonnegative");
    const int n = inst.U.strands();
    if (inst.V.strands() != n) throw StrandMismatch("U and V strand counts differ");
    std::vector<std::pair<PositiveWord, PositiveWord>> out;
    if (inst.U.size() != inst.V.size()) return out;  // length is a class invariant

    const NormalForm u_nf = left_normal_form(inst.U.word());
    const NormalForm v_nf = left_normal_form(inst.V.word());
    const int limit = std::min<int>(maxlen, static_cast<int>(inst.U.size()));
    auto reps = positive_representatives(n, limit);
    for (int len_s = 0; len_s <= limit; ++len_s) {
        for (const BraidWord& s : reps[static_cast<std::size_t>(len_s)]) {
            NormalForm s_nf = left_normal_form(s);
            NormalForm t_nf = nf_multiply(nf_invert(s_nf), u_nf);
            if (t_nf.inf() < 0) continue;  // s does not left-divide U positively
            if (nf_multiply(t_nf, s_nf) != v_nf) continue;
            out.emplace_back(PositiveWord(s), t_nf.positive_word());
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (word_less(a.first.word(), b.first.word())) return true;
        if (word_less(b.first.word(), a.first.word())) return false;
        return word_less(a.second.word(), b.second.word());
    });
    return out;
}

std::vector<BraidWord> csp_bruteforce(const CspInstance& inst, int maxlen) {
    if (maxlen < 0) throw BadParameter("maxlen must be nonnegative");
    const int n = inst.x.strands();
    if (inst.y.strands() != n) throw StrandMismatch("x and y strand counts differ");
    const NormalForm x_nf = left_normal_form(inst.x);
    const NormalForm y_nf = left_normal_form(inst.y);
    std::vector<BraidWord> out;
    for (const BraidWord& s : signed_representatives(n, maxlen)) {
        NormalForm s_nf = left_normal_form(s);
        if (nf_multiply(nf_multiply(s_nf, x_nf), nf_invert(s_nf)) == y_nf) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

std::vector<std::pair<BraidWord, BraidWord>> group_edp_bruteforce(const BraidWord& U,
                                                                  const BraidWord& V,
                                                                  int maxlen) {
    const int n = U.strands();
    if (V.strands() != n) throw StrandMismatch("U and V strand counts differ");
    const NormalForm u_nf = left_normal_form(U);
    const NormalForm v_nf = left_normal_form(V);
    std::vector<std::pair<BraidWord, BraidWord>> out;
    for (const BraidWord& s : signed_representatives(n, maxlen)) {
        NormalForm s_nf = left_normal_form(s);
        NormalForm c_nf = nf_multiply(nf_invert(s_nf), u_nf);  // s*c = U by construction
        if (nf_multiply(c_nf, s_nf) != v_nf) continue;
        out.emplace_back(s, c_nf.word());
    }
    return out;
}

BraidWord csp_to_edp(const CspInstance& inst, const EdpSolver& solver) {
    const BraidWord& U = inst.y;
    const BraidWord& V = inst.x;
    for (const auto& [s, c] : solver(U, V)) {
        if (words_equal(multiply(s, c), U) && words_equal(multiply(c, s), V)) {
            return s;
        }
    }
    throw ReductionFailed("decomposition solver produced no verified factorization");
}

std::pair<BraidWord, BraidWord> edp_to_csp(const EdpInstance& inst, const CspSolver& solver) {
    const BraidWord& U = inst.U.word();
    const BraidWord& V = inst.V.word();
    for (const BraidWord& t : solver(U, V)) {
        BraidWord s = multiply(U, invert(t));
        if (words_equal(multiply(s, t), U) && words_equal(multiply(t, s), V)) {
            return {s, t};
        }
    }
    throw ReductionFailed("conjugacy solver produced no verified conjugator");
}

EdpSolver make_edp_bruteforce_solver(int maxlen) {
    return [maxlen](const BraidWord& U, const BraidWord& V) {
        EdpInstance inst{PositiveWord(U), PositiveWord(V), std::nullopt};
        std::vector<std::pair<BraidWord, BraidWord>> out;
        for (auto& [s, t] : edp_bruteforce(inst, maxlen)) {
            out.emplace_back(s.word(), t.word());
        }
        return out;
    };
}

CspSolver make_csp_bruteforce_solver(int maxlen) {
    return [maxlen](const BraidWord& x, const BraidWord& y) {
        return csp_bruteforce(CspInstance{x, y, std::nullopt}, maxlen);
    };
}

EdpInstance generate_planted_edp(int strands, int len_s, int len_t,
                                 std::span<const uint8_t> seed) {
    if (len_s < 0 || len_t < 0) throw BadParameter("planted lengths must be nonnegative");
    SeedStream stream(seed);
    auto random_positive = [&](int len) {
        std::vector<int32_t> letters;
        letters.reserve(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            letters.push_back(static_cast<int32_t>(stream.uniform(1, static_cast<uint64_t>(strands - 1))));
        }
        return PositiveWord(strands, std::move(letters));
    };
    PositiveWord s = random_positive(len_s);
    PositiveWord t = random_positive(len_t);
    EdpInstance inst{multiply(s, t), multiply(t, s), std::make_pair(s, t)};
    return inst;
}

}  // namespace braidcrypt::analysis
