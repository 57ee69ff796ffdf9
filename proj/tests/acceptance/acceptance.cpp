// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0
//
// Acceptance suite: one criterion per entry, one pass/fail line each.
// Run everything (default) or a single criterion with --only N.

#include <chrono>
#include <cstdio>
#include <unistd.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidcrypt/analysis.hpp"
#include "braidcrypt/kx.hpp"
#include "braidcrypt/pke.hpp"
#include "braidcrypt/rng.hpp"
#include "braidcrypt/sha256.hpp"
#include "braidcrypt/wire.hpp"
#include "support/rewrite_oracle.hpp"

using namespace braidcrypt;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<uint8_t> seed_bytes(const std::string& label) {
    return {label.begin(), label.end()};
}

BraidWord random_word(SeedStream& rng, int n, int maxlen, bool positive_only) {
    auto len = static_cast<int>(rng.uniform(0, static_cast<uint64_t>(maxlen)));
    std::vector<int32_t> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        auto g = static_cast<int32_t>(rng.uniform(1, static_cast<uint64_t>(n - 1)));
        if (!positive_only && rng.uniform(0, 1)) g = -g;
        letters.push_back(g);
    }
    return BraidWord(n, std::move(letters));
}

BraidWord delta_power_word(int n, int64_t m) {
    BraidWord out(n);
    const BraidWord delta = fundamental_braid(n).word();
    for (int64_t i = 0; i < m; ++i) out = multiply(out, delta);
    return out;
}

// ---------------------------------------------------------------- criterion 1

// Length cap for the signed-word closure; every chain connecting two
// length-<=6 words over B_3 fits comfortably (verified by the zero-
// disagreement run; raising the cap changes nothing).
constexpr int kSignedCap = 12;

Outcome criterion_oracle_equivalence() {
    auto start = Clock::now();

    // every signed word of length <= 6 over B_3
    std::vector<oracle::Word> words{{}};
    {
        std::vector<oracle::Word> frontier{{}};
        for (int len = 1; len <= 6; ++len) {
            std::vector<oracle::Word> next;
            for (const auto& w : frontier) {
                for (int letter : {1, 2, -1, -2}) {
                    oracle::Word v = w;
                    v.push_back(letter);
                    next.push_back(v);
                }
            }
            words.insert(words.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
    }

    oracle::SignedClasses classes(3, kSignedCap);
    std::unordered_map<std::string, int> nf_ids;
    std::unordered_map<uint32_t, int> comp_to_nf;
    std::unordered_map<int, uint32_t> nf_to_comp;
    std::size_t disagreements = 0;
    for (const auto& w : words) {
        BraidWord bw(3, std::vector<int32_t>(w.begin(), w.end()));
        auto enc = wire::encode_nf(left_normal_form(bw));
        std::string key(enc.begin(), enc.end());
        auto [it, fresh] = nf_ids.try_emplace(key, static_cast<int>(nf_ids.size()));
        int nf_id = it->second;
        (void)fresh;
        uint32_t comp = classes.component(w);
        auto c2n = comp_to_nf.try_emplace(comp, nf_id);
        if (!c2n.second && c2n.first->second != nf_id) ++disagreements;
        auto n2c = nf_to_comp.try_emplace(nf_id, comp);
        if (!n2c.second && n2c.first->second != comp) ++disagreements;
    }
    std::size_t signed_words = words.size();
    std::size_t signed_classes = nf_ids.size();

    // every positive word of length <= 5 over B_4
    auto positive_ids = oracle::positive_partition(4, 5);
    std::unordered_map<std::string, int> nf_ids4;
    std::map<int, int> comp_to_nf4;
    std::map<int, int> nf_to_comp4;
    for (const auto& [w, comp] : positive_ids) {
        BraidWord bw(4, std::vector<int32_t>(w.begin(), w.end()));
        auto enc = wire::encode_nf(left_normal_form(bw));
        std::string key(enc.begin(), enc.end());
        auto [it, fresh] = nf_ids4.try_emplace(key, static_cast<int>(nf_ids4.size()));
        (void)fresh;
        auto c2n = comp_to_nf4.try_emplace(comp, it->second);
        if (!c2n.second && c2n.first->second != it->second) ++disagreements;
        auto n2c = nf_to_comp4.try_emplace(it->second, comp);
        if (!n2c.second && n2c.first->second != comp) ++disagreements;
    }

    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << signed_words << " signed B_3 words (" << signed_classes << " classes), "
           << positive_ids.size() << " positive B_4 words, " << disagreements
           << " disagreements, " << elapsed << " s";
    return {disagreements == 0 && elapsed < 600.0, detail.str()};
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion_delta_square_central() {
    SeedStream rng(seed_bytes("acceptance-theorem-1"));
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
        int n = static_cast<int>(rng.uniform(3, 8));
        BraidWord x = random_word(rng, n, 30, false);
        BraidWord d2 = delta_power_word(n, 2);
        if (!words_equal(multiply(d2, x), multiply(x, d2))) ++failures;
    }
    return {failures == 0, "500 random words, " + std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion_complement() {
    SeedStream rng(seed_bytes("acceptance-complement"));
    int failures = 0;
    for (int i = 0; i < 500; ++i) {
        int n = static_cast<int>(rng.uniform(3, 8));
        PositiveWord x(random_word(rng, n, 20, true));
        int64_t sup = left_normal_form(x.word()).sup();
        for (int64_t m = sup; m <= sup + 2; ++m) {
            PositiveWord y = complement(x, m);
            if (!words_equal(multiply(x.word(), y.word()), delta_power_word(n, m))) {
                ++failures;
            }
        }
        try {
            complement(x, sup - 1);
            ++failures;  // must have thrown
        } catch (const ComplementTooSmall&) {
        }
    }
    return {failures == 0, "500 random positive words x 3 exponents, " +
                               std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion_simple_complements_n4() {
    std::vector<uint16_t> table{0, 1, 2, 3};
    const BraidWord delta = fundamental_braid(4).word();
    int checked = 0;
    int failures = 0;
    std::vector<SimpleBraid> simples;
    do {
        simples.push_back(SimpleBraid::from_table(table));
    } while (std::next_permutation(table.begin(), table.end()));
    for (const auto& a : simples) {
        ++checked;
        BraidWord aw = simple_to_word(a).word();
        PositiveWord d2 = complement(PositiveWord(aw), 1);
        if (!words_equal(multiply(aw, d2.word()), delta)) ++failures;
        bool found_left = false;
        for (const auto& d1 : simples) {
            if (words_equal(multiply(simple_to_word(d1).word(), aw), delta)) {
                found_left = true;
                break;
            }
        }
        if (!found_left) ++failures;
    }
    return {failures == 0 && checked == 24,
            "all 24 simple braids of B_4, both-sided complements, " +
                std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- criterion 5

kx::KxParams random_session_params(SeedStream& rng) {
    kx::KxParams params;
    params.strands = static_cast<int>(rng.uniform(3, 10));
    auto l = rng.uniform(1, 4);
    auto m = rng.uniform(1, 4);
    auto tuple = [&](uint64_t count) {
        std::vector<PositiveWord> out;
        for (uint64_t i = 0; i < count; ++i) {
            out.push_back(PositiveWord(random_word(rng, params.strands, 8, true)));
        }
        return out;
    };
    params.p = tuple(l);
    params.q = tuple(m);
    params.length_min = static_cast<int>(rng.uniform(1, 8));
    params.length_max = static_cast<int>(rng.uniform(
        static_cast<uint64_t>(params.length_min), 8));
    params.k = 1;
    params.h = 1;
    return params;
}

// keygen with the exponent half raised to minimal-feasible plus margin when
// the first attempt reports it is too small
kx::KxPrivate keygen_feasible(kx::KxParams& params, kx::Role role,
                              const std::vector<uint8_t>& seed, int margin) {
    try {
        return kx::kx_keygen(params, role, seed);
    } catch (const ExponentTooSmall& e) {
        if (role == kx::Role::Alice) params.k = e.min_half_exponent + margin;
        else params.h = e.min_half_exponent + margin;
        return kx::kx_keygen(params, role, seed);
    }
}

Outcome criterion_kx_correctness() {
    auto start = Clock::now();
    SeedStream rng(seed_bytes("acceptance-kx"));
    int failures = 0;
    const int sessions = 1000;
    for (int i = 0; i < sessions; ++i) {
        kx::KxParams params = random_session_params(rng);
        auto seed_a = seed_bytes("kx-alice-" + std::to_string(i));
        auto seed_b = seed_bytes("kx-bob-" + std::to_string(i));
        kx::KxPrivate alice = keygen_feasible(params, kx::Role::Alice, seed_a,
                                              static_cast<int>(rng.uniform(0, 2)));
        kx::KxPrivate bob = keygen_feasible(params, kx::Role::Bob, seed_b,
                                            static_cast<int>(rng.uniform(0, 2)));
        kx::KxMessage am = kx::alice_message(alice, params);
        kx::KxMessage bm = kx::bob_message(bob, params);
        kx::SharedSecret s = kx::alice_shared(alice, bm, params);
        kx::SharedSecret t = kx::bob_shared(bob, am, params);
        NormalForm direct = left_normal_form(
            multiply(multiply(bob.cosecret.word(), alice.secret.word()),
                     multiply(bob.secret.word(), alice.cosecret.word())));
        if (!(s.value == t.value && s.value == direct && s.key == t.key)) ++failures;
    }

    // the paper's uncorrected exponent (k in Alice's correction instead of h)
    // must break agreement as soon as k != h and L > 1
    bool erratum_shown = false;
    {
        kx::KxParams params;
        params.strands = 4;
        params.p = {PositiveWord(4, {1}), PositiveWord(4, {2, 3})};
        params.q = {PositiveWord(4, {3}), PositiveWord(4, {1, 2})};
        params.k = 2;
        params.h = 5;
        params.length_min = params.length_max = 3;
        auto seed_a = seed_bytes("kx-erratum-a");
        auto seed_b = seed_bytes("kx-erratum-b");
        kx::KxPrivate alice = keygen_feasible(params, kx::Role::Alice, seed_a, 0);
        kx::KxPrivate bob = keygen_feasible(params, kx::Role::Bob, seed_b, 0);
        kx::KxMessage bm = kx::bob_message(bob, params);
        kx::KxMessage am = kx::alice_message(alice, params);
        kx::SharedSecret t = kx::bob_shared(bob, am, params);
        NormalForm prod = NormalForm::identity(params.strands);
        for (int idx : alice.seq) {
            prod = nf_multiply(prod, bm.transformed[static_cast<std::size_t>(idx - 1)]);
        }
        prod = nf_multiply(prod, left_normal_form(alice.cosecret.word()));
        NormalForm wrong = shift_delta(
            prod, -2 * static_cast<int64_t>(params.k) *
                      (static_cast<int64_t>(alice.seq.size()) - 1));
        kx::SharedSecret right = kx::alice_shared(alice, bm, params);
        erratum_shown = (wrong != t.value) && (right.value == t.value);
    }

    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << sessions << " sessions, " << failures << " failures, uncorrected-exponent "
           << (erratum_shown ? "mismatch shown" : "check FAILED") << ", " << elapsed << " s";
    return {failures == 0 && erratum_shown && elapsed < 60.0, detail.str()};
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion_pke_round_trip() {
    SeedStream rng(seed_bytes("acceptance-pke"));
    int failures = 0;
    const int messages = 200;
    pke::PkeParams params;
    std::optional<std::pair<pke::PkePublicKey, pke::PkeSecretKey>> keys;
    for (int i = 0; i < messages; ++i) {
        if (i % 20 == 0) {  // a fresh small parameter set every 20 messages
            params = pke::PkeParams{};
            params.strands = static_cast<int>(rng.uniform(3, 6));
            auto tuple = [&](uint64_t count) {
                std::vector<PositiveWord> out;
                for (uint64_t j = 0; j < count; ++j) {
                    out.push_back(PositiveWord(random_word(rng, params.strands, 6, true)));
                }
                return out;
            };
            params.p = tuple(rng.uniform(1, 3));
            params.q = tuple(rng.uniform(1, 3));
            params.length_min = static_cast<int>(rng.uniform(1, 3));
            params.length_max = static_cast<int>(
                rng.uniform(static_cast<uint64_t>(params.length_min), 3));
            auto kg_seed = seed_bytes("pke-kg-" + std::to_string(i));
            try {
                keys = pke::pke_keygen(params, 1, kg_seed);
            } catch (const ExponentTooSmall& e) {
                int d = e.min_half_exponent + static_cast<int>(rng.uniform(0, 2));
                keys = pke::pke_keygen(params, d, kg_seed);
            }
        }
        const pke::PkePublicKey& pk = keys->first;
        const pke::PkeSecretKey& sk = keys->second;
        auto len = static_cast<std::size_t>(rng.uniform(0, 4096));
        std::vector<uint8_t> msg(len);
        for (auto& b : msg) b = rng.next_byte();
        auto enc_seed = seed_bytes("pke-enc-" + std::to_string(i));
        pke::Ciphertext ct = pke::pke_encrypt(pk, msg, enc_seed);
        if (pke::pke_decrypt(sk, pk, ct) != msg) {
            ++failures;
            continue;
        }

        // encryptor's Z, replayed from the seed; decryptor's Z, recomputed
        SeedStream replay(enc_seed);
        auto length = static_cast<std::size_t>(
            replay.uniform(static_cast<uint64_t>(params.length_min),
                           static_cast<uint64_t>(params.length_max)));
        PositiveWord r(params.strands, {});
        for (std::size_t j = 0; j < length; ++j) {
            auto idx = static_cast<std::size_t>(replay.uniform(1, params.q.size()));
            r = multiply(r, params.q[idx - 1]);
        }
        PositiveWord r1 = complement(r, 2 * static_cast<int64_t>(ct.t));
        NormalForm z_enc = left_normal_form(multiply(
            multiply(r1.word(), sk.s.word()), multiply(r.word(), sk.s1.word())));

        NormalForm z_dec = NormalForm::identity(params.strands);
        for (int idx : sk.seq) {
            z_dec = nf_multiply(z_dec, ct.Y[static_cast<std::size_t>(idx - 1)]);
        }
        z_dec = nf_multiply(z_dec, left_normal_form(sk.s1.word()));
        z_dec = shift_delta(z_dec, -2 * static_cast<int64_t>(ct.t) *
                                       (static_cast<int64_t>(sk.seq.size()) - 1));
        if (!(z_dec == z_enc)) ++failures;
    }
    return {failures == 0,
            std::to_string(messages) + " messages (0..4096 bytes), " +
                std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion_reductions() {
    SeedStream rng(seed_bytes("acceptance-theorem-4"));
    int failures = 0;

    // 100 planted conjugacy instances solved through the decomposition solver
    for (int i = 0; i < 100; ++i) {
        int len_s = static_cast<int>(rng.uniform(1, 3));
        int len_t = static_cast<int>(rng.uniform(0, 3));
        analysis::EdpInstance planted = analysis::generate_planted_edp(
            3, len_s, len_t, seed_bytes("csp-plant-" + std::to_string(i)));
        analysis::CspInstance inst{planted.V.word(), planted.U.word(),
                                   planted.planted->first.word()};
        try {
            BraidWord s = analysis::csp_to_edp(
                inst,
                analysis::make_edp_bruteforce_solver(static_cast<int>(planted.U.size())));
            if (!words_equal(multiply(multiply(s, inst.x), invert(s)), inst.y)) ++failures;
        } catch (const ReductionFailed&) {
            ++failures;
        }
    }

    // 100 planted decomposition instances solved through the conjugacy solver,
    // and the same instances recovered by direct brute force
    for (int i = 0; i < 100; ++i) {
        int len_s = static_cast<int>(rng.uniform(0, 3));
        int len_t = static_cast<int>(rng.uniform(0, 3));
        analysis::EdpInstance inst = analysis::generate_planted_edp(
            3, len_s, len_t, seed_bytes("edp-plant-" + std::to_string(i)));
        try {
            auto [s, t] = analysis::edp_to_csp(inst, analysis::make_csp_bruteforce_solver(3));
            if (!words_equal(multiply(s, t), inst.U.word()) ||
                !words_equal(multiply(t, s), inst.V.word())) {
                ++failures;
            }
        } catch (const ReductionFailed&) {
            ++failures;
        }
        auto sols = analysis::edp_bruteforce(inst, len_s);
        bool found = false;
        for (const auto& [s, t] : sols) {
            if (words_equal(s.word(), inst.planted->first.word()) &&
                words_equal(t.word(), inst.planted->second.word())) {
                found = true;
                break;
            }
        }
        if (!found) ++failures;
    }
    return {failures == 0, "100 conjugacy + 100 decomposition reductions, " +
                               std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- criterion 8

Outcome criterion_wire_format() {
    int failures = 0;
    auto expect = [&](const NormalForm& nf, std::initializer_list<int> want) {
        std::vector<uint8_t> bytes;
        for (int b : want) bytes.push_back(static_cast<uint8_t>(b));
        if (wire::encode_nf(nf) != bytes) ++failures;
    };
    expect(NormalForm::identity(3),
           {0x42, 0x52, 0x44, 0x31, 0x00, 0x03, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
            0x00});
    expect(left_normal_form(BraidWord(3, {1})),
           {0x42, 0x52, 0x44, 0x31, 0x00, 0x03, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
            0x01, 0x02, 0x01, 0x03});
    expect(left_normal_form(BraidWord(3, {1, 2, 1})),
           {0x42, 0x52, 0x44, 0x31, 0x00, 0x03, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00,
            0x00});

    SeedStream rng(seed_bytes("acceptance-wire"));
    for (int i = 0; i < 500; ++i) {
        int n = static_cast<int>(rng.uniform(2, 12));
        NormalForm x = left_normal_form(random_word(rng, n, 20, false));
        if (wire::decode_nf(wire::encode_nf(x)) != x) ++failures;
    }

    // frozen PKE key vector (tiny instance, all-zero 8-byte seeds)
    pke::PkeParams params;
    params.strands = 3;
    params.p = {PositiveWord(3, {1})};
    params.q = {PositiveWord(3, {2})};
    params.length_min = params.length_max = 1;
    std::vector<uint8_t> zero_seed(8, 0x00);
    auto [pk, sk] = pke::pke_keygen(params, 2, zero_seed);
    pke::Ciphertext ct = pke::pke_encrypt(pk, std::vector<uint8_t>{}, zero_seed);
    NormalForm z = NormalForm::identity(3);
    for (int idx : sk.seq) z = nf_multiply(z, ct.Y[static_cast<std::size_t>(idx - 1)]);
    z = nf_multiply(z, left_normal_form(sk.s1.word()));
    z = shift_delta(z, -2 * static_cast<int64_t>(ct.t) *
                           (static_cast<int64_t>(sk.seq.size()) - 1));
    auto [key, stream] = pke::kdf_and_keystream(ct.Y, z, 0);
    (void)stream;
    if (to_hex(key) != "a65ba1aa47ecd88fe62134b5d60b864212e129f3de0e7a0e253c249fe65314b4") ++failures;

    return {failures == 0,
            "3 golden vectors, 500 round trips, frozen PKE key, " +
                std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- criterion 9

Outcome criterion_tcp_demo() {
    const char* cli = std::getenv("BRAIDCLI");
    if (!cli) return {false, "BRAIDCLI environment variable not set"};
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("braid-accept-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fs::path params = dir / "params.json";
    {
        std::ofstream out(params);
        out << R"({"n":4,"p":["1","2 3"],"q":["3","1 2"],"k":3,"h":3,"L_min":1,"L_max":3})";
    }

    auto start = Clock::now();
    std::string serve_cmd = std::string(cli) + " demo serve --port 0 --params " +
                            params.string() + " --seed 0b0b --once 2>/dev/null";
    FILE* server = popen(serve_cmd.c_str(), "r");
    if (!server) return {false, "failed to start the demo server"};

    char line[256];
    std::string port;
    if (fgets(line, sizeof(line), server)) {
        std::string text(line);
        if (text.rfind("PORT ", 0) == 0) {
            port = text.substr(5);
            while (!port.empty() && (port.back() == '\n' || port.back() == '\r')) {
                port.pop_back();
            }
        }
    }
    if (port.empty()) {
        pclose(server);
        return {false, "server did not announce its port"};
    }

    std::string connect_cmd = std::string(cli) + " demo connect --host 127.0.0.1 --port " +
                              port + " --params " + params.string() +
                              " --seed a11ce0 2>/dev/null";
    FILE* client = popen(connect_cmd.c_str(), "r");
    std::string client_key;
    if (client) {
        if (fgets(line, sizeof(line), client)) client_key = line;
        pclose(client);
    }

    std::string server_key;
    if (fgets(line, sizeof(line), server)) server_key = line;
    int server_status = pclose(server);
    double elapsed = seconds_since(start);

    std::error_code ec;
    fs::remove_all(dir, ec);

    bool ok = !client_key.empty() && client_key == server_key &&
              client_key.size() == 65 && server_status == 0 && elapsed < 5.0;
    std::ostringstream detail;
    detail << "loopback handshake, keys " << (client_key == server_key ? "match" : "differ")
           << ", " << elapsed << " s";
    return {ok, detail.str()};
}

// -----------------------------------------------------------------------------

struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "normal-form oracle equivalence", criterion_oracle_equivalence},
        {2, "Delta^2 centrality", criterion_delta_square_central},
        {3, "positive complements", criterion_complement},
        {4, "simple-braid complements at n=4", criterion_simple_complements_n4},
        {5, "key-exchange correctness", criterion_kx_correctness},
        {6, "PKE round trip", criterion_pke_round_trip},
        {7, "hardness reductions", criterion_reductions},
        {8, "wire format golden vectors", criterion_wire_format},
        {9, "TCP demo handshake", criterion_tcp_demo},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    bool all_passed = true;
    for (const auto& criterion : criteria()) {
        if (only != 0 && criterion.number != only) continue;
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        all_passed = all_passed && outcome.passed;
        std::cout << (outcome.passed ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number
                  << ": " << criterion.name << " — " << outcome.detail << "\n"
                  << std::flush;
    }
    return all_passed ? 0 : 1;
}
