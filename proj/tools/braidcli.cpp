// Copyright 2026 the braidcrypt authors. Licensed under the Apache License,
// Version 2.0: http://www.apache.org/licenses/LICENSE-2.0
//
// braidcli: normal forms, the exchange-decomposition key agreement, the
// hybrid encryption scheme, brute-force attack tooling, and a loopback
// handshake demo. Exit codes: 0 success, 2 malformed input, 3
// protocol/verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "braidcrypt/analysis.hpp"
#include "braidcrypt/kx.hpp"
#include "braidcrypt/net.hpp"
#include "braidcrypt/pke.hpp"
#include "braidcrypt/sha256.hpp"
#include "braidcrypt/wire.hpp"

namespace bc = braidcrypt;
using nlohmann::json;

namespace {

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bc::BadParameter("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string data = buf.str();
    return {data.begin(), data.end()};
}

void write_file(const std::string& path, std::span<const uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw bc::BadParameter("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw bc::BadParameter("write to '" + path + "' failed");
}

void write_text(const std::string& path, const std::string& text) {
    write_file(path, std::span<const uint8_t>(
                         reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

json load_json(const std::string& path) {
    auto bytes = read_file(path);
    try {
        return json::parse(bytes.begin(), bytes.end());
    } catch (const json::exception& e) {
        throw bc::BadParameter("bad JSON in '" + path + "': " + e.what());
    }
}

std::vector<bc::PositiveWord> parse_tuple(const json& arr, int strands, const char* name) {
    if (!arr.is_array() || arr.empty()) {
        throw bc::BadParameter(std::string("params field '") + name +
                               "' must be a nonempty array of words");
    }
    std::vector<bc::PositiveWord> out;
    out.reserve(arr.size());
    for (const auto& entry : arr) {
        out.emplace_back(bc::parse_word(entry.get<std::string>(), strands));
    }
    return out;
}

bc::kx::KxParams load_kx_params(const std::string& path) {
    json j = load_json(path);
    bc::kx::KxParams params;
    try {
        params.strands = j.at("n").get<int>();
        params.p = parse_tuple(j.at("p"), params.strands, "p");
        params.q = parse_tuple(j.at("q"), params.strands, "q");
        params.k = j.at("k").get<int>();
        params.h = j.at("h").get<int>();
        params.length_min = j.value("L_min", 4);
        params.length_max = j.value("L_max", 16);
    } catch (const json::exception& e) {
        throw bc::BadParameter("bad params file '" + path + "': " + e.what());
    }
    params.validate();
    return params;
}

bc::pke::PkeParams load_pke_params(const std::string& path) {
    json j = load_json(path);
    bc::pke::PkeParams params;
    try {
        params.strands = j.at("n").get<int>();
        params.p = parse_tuple(j.at("p"), params.strands, "p");
        params.q = parse_tuple(j.at("q"), params.strands, "q");
        params.length_min = j.value("L_min", 4);
        params.length_max = j.value("L_max", 16);
    } catch (const json::exception& e) {
        throw bc::BadParameter("bad params file '" + path + "': " + e.what());
    }
    params.validate();
    return params;
}

json params_to_json(const bc::kx::KxParams& params) {
    json jp = json::array(), jq = json::array();
    for (const auto& w : params.p) jp.push_back(bc::format_word(w.word()));
    for (const auto& w : params.q) jq.push_back(bc::format_word(w.word()));
    return json{{"n", params.strands}, {"p", jp},          {"q", jq},
                {"k", params.k},       {"h", params.h},    {"L_min", params.length_min},
                {"L_max", params.length_max}};
}

struct PrivFile {
    bc::kx::KxParams params;
    bc::kx::KxPrivate priv;
};

PrivFile load_priv(const std::string& path) {
    json j = load_json(path);
    bc::kx::KxParams params;
    try {
        json jp = j.at("params");
        params.strands = jp.at("n").get<int>();
        params.p = parse_tuple(jp.at("p"), params.strands, "p");
        params.q = parse_tuple(jp.at("q"), params.strands, "q");
        params.k = jp.at("k").get<int>();
        params.h = jp.at("h").get<int>();
        params.length_min = jp.value("L_min", 4);
        params.length_max = jp.value("L_max", 16);
        params.validate();
        std::string role_name = j.at("role").get<std::string>();
        bc::kx::Role role;
        if (role_name == "alice") role = bc::kx::Role::Alice;
        else if (role_name == "bob") role = bc::kx::Role::Bob;
        else throw bc::BadParameter("role must be 'alice' or 'bob'");
        bc::kx::KxPrivate priv{
            role, j.at("seq").get<std::vector<int>>(),
            bc::PositiveWord(bc::parse_word(j.at("secret").get<std::string>(), params.strands)),
            bc::PositiveWord(bc::parse_word(j.at("cosecret").get<std::string>(), params.strands))};
        return PrivFile{std::move(params), std::move(priv)};
    } catch (const json::exception& e) {
        throw bc::BadParameter("bad private key file '" + path + "': " + e.what());
    }
}

std::vector<uint8_t> parse_seed(const std::string& hex) {
    auto bytes = bc::from_hex(hex);
    if (bytes.empty()) throw bc::BadParameter("seed must be nonempty hex");
    return bytes;
}

constexpr char kCiphertextMagic[4] = {'B', 'C', 'T', '1'};

int run_nf(int strands, const std::vector<std::string>& pieces) {
    std::string text;
    for (const auto& piece : pieces) {
        if (!text.empty()) text.push_back(' ');
        text += piece;
    }
    bc::BraidWord word = bc::parse_word(text, strands);
    std::cout << bc::pretty(bc::left_normal_form(word)) << "\n";
    return 0;
}

int run_kx_keygen(const std::string& params_path, const std::string& role_name,
                  const std::string& seed_hex, const std::string& out_path) {
    bc::kx::KxParams params = load_kx_params(params_path);
    bc::kx::Role role;
    if (role_name == "alice") role = bc::kx::Role::Alice;
    else if (role_name == "bob") role = bc::kx::Role::Bob;
    else throw bc::BadParameter("--role must be alice or bob");
    auto seed = parse_seed(seed_hex);
    bc::kx::KxPrivate priv = bc::kx::kx_keygen(params, role, seed);
    json j{{"role", role == bc::kx::Role::Alice ? "alice" : "bob"},
           {"seq", priv.seq},
           {"secret", bc::format_word(priv.secret.word())},
           {"cosecret", bc::format_word(priv.cosecret.word())},
           {"params", params_to_json(params)}};
    write_text(out_path, j.dump(2) + "\n");
    return 0;
}

int run_kx_message(const std::string& priv_path, const std::string& out_path) {
    PrivFile pf = load_priv(priv_path);
    bc::kx::KxMessage msg = pf.priv.role == bc::kx::Role::Alice
                                ? bc::kx::alice_message(pf.priv, pf.params)
                                : bc::kx::bob_message(pf.priv, pf.params);
    write_file(out_path, bc::wire::encode_braid_list(msg.transformed));
    return 0;
}

int run_kx_finish(const std::string& priv_path, const std::string& msg_path) {
    PrivFile pf = load_priv(priv_path);
    bc::kx::KxMessage msg{bc::wire::decode_braid_list(read_file(msg_path))};
    bc::kx::SharedSecret shared = pf.priv.role == bc::kx::Role::Alice
                                      ? bc::kx::alice_shared(pf.priv, msg, pf.params)
                                      : bc::kx::bob_shared(pf.priv, msg, pf.params);
    std::cout << bc::to_hex(bc::kx::derive_session_key(shared)) << "\n";
    return 0;
}

int run_pke_keygen(const std::string& params_path, int d, const std::string& seed_hex,
                   const std::string& pub_path, const std::string& sec_path) {
    bc::pke::PkeParams params = load_pke_params(params_path);
    auto [pk, sk] = bc::pke::pke_keygen(params, d, parse_seed(seed_hex));
    json jp = json::array(), jq = json::array(), jqp = json::array();
    for (const auto& w : params.p) jp.push_back(bc::format_word(w.word()));
    for (const auto& w : params.q) jq.push_back(bc::format_word(w.word()));
    for (const auto& nf : pk.qprime) jqp.push_back(bc::format_word(nf.word()));
    json pub{{"n", params.strands}, {"p", jp}, {"q", jq},
             {"L_min", params.length_min}, {"L_max", params.length_max},
             {"d", d}, {"qprime", jqp}};
    write_text(pub_path, pub.dump(2) + "\n");
    json sec{{"n", params.strands},
             {"seq", sk.seq},
             {"s", bc::format_word(sk.s.word())},
             {"s_1", bc::format_word(sk.s1.word())}};
    write_text(sec_path, sec.dump(2) + "\n");
    return 0;
}

bc::pke::PkePublicKey load_pub(const std::string& path) {
    json j = load_json(path);
    try {
        bc::pke::PkeParams params;
        params.strands = j.at("n").get<int>();
        params.p = parse_tuple(j.at("p"), params.strands, "p");
        params.q = parse_tuple(j.at("q"), params.strands, "q");
        params.length_min = j.value("L_min", 4);
        params.length_max = j.value("L_max", 16);
        params.validate();
        bc::pke::PkePublicKey pk{std::move(params), j.at("d").get<int>(), {}};
        for (const auto& entry : j.at("qprime")) {
            pk.qprime.push_back(bc::left_normal_form(
                bc::parse_word(entry.get<std::string>(), pk.params.strands)));
        }
        return pk;
    } catch (const json::exception& e) {
        throw bc::BadParameter("bad public key file '" + path + "': " + e.what());
    }
}

bc::pke::PkeSecretKey load_sec(const std::string& path, int* strands_out) {
    json j = load_json(path);
    try {
        int strands = j.at("n").get<int>();
        if (strands_out) *strands_out = strands;
        return bc::pke::PkeSecretKey{
            j.at("seq").get<std::vector<int>>(),
            bc::PositiveWord(bc::parse_word(j.at("s").get<std::string>(), strands)),
            bc::PositiveWord(bc::parse_word(j.at("s_1").get<std::string>(), strands))};
    } catch (const json::exception& e) {
        throw bc::BadParameter("bad secret key file '" + path + "': " + e.what());
    }
}

int run_pke_encrypt(const std::string& pub_path, const std::string& in_path,
                    const std::string& seed_hex, const std::string& out_path, bool b64) {
    bc::pke::PkePublicKey pk = load_pub(pub_path);
    auto msg = read_file(in_path);
    bc::pke::Ciphertext ct = bc::pke::pke_encrypt(pk, msg, parse_seed(seed_hex));
    auto bytes = bc::pke::encode_ciphertext(ct);
    if (b64) {
        write_text(out_path, bc::wire::to_base64(bytes) + "\n");
    } else {
        write_file(out_path, bytes);
    }
    return 0;
}

int run_pke_decrypt(const std::string& sec_path, const std::string& pub_path,
                    const std::string& in_path, const std::string& out_path) {
    bc::pke::PkePublicKey pk = load_pub(pub_path);
    bc::pke::PkeSecretKey sk = load_sec(sec_path, nullptr);
    auto bytes = read_file(in_path);
    bool binary = bytes.size() >= 4 && std::equal(kCiphertextMagic, kCiphertextMagic + 4,
                                                  bytes.begin(),
                                                  [](char c, uint8_t b) {
                                                      return static_cast<uint8_t>(c) == b;
                                                  });
    if (!binary) {
        bytes = bc::wire::from_base64(std::string(bytes.begin(), bytes.end()));
    }
    bc::pke::Ciphertext ct = bc::pke::decode_ciphertext(bytes);
    auto msg = bc::pke::pke_decrypt(sk, pk, ct);
    write_file(out_path, msg);
    return 0;
}

int run_attack_edp(const std::string& instance_path, int maxlen) {
    json j = load_json(instance_path);
    int strands = 0;
    bc::analysis::EdpInstance inst{bc::PositiveWord(2, {}), bc::PositiveWord(2, {}), {}};
    try {
        strands = j.at("n").get<int>();
        inst.U = bc::PositiveWord(bc::parse_word(j.at("U").get<std::string>(), strands));
        inst.V = bc::PositiveWord(bc::parse_word(j.at("V").get<std::string>(), strands));
    } catch (const json::exception& e) {
        throw bc::BadParameter("bad instance file '" + instance_path + "': " + e.what());
    }
    auto solutions = bc::analysis::edp_bruteforce(inst, maxlen);
    for (const auto& [s, t] : solutions) {
        std::string sw = bc::format_word(s.word());
        std::string tw = bc::format_word(t.word());
        std::cout << (sw.empty() ? "e" : sw) << " | " << (tw.empty() ? "e" : tw) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid-group cryptography toolkit"};
    app.require_subcommand(1);

    // nf
    auto* nf_cmd = app.add_subcommand("nf", "print the left normal form of a word");
    int nf_strands = 0;
    std::vector<std::string> nf_word;
    nf_cmd->add_option("--n", nf_strands, "strand count")->required();
    nf_cmd->add_option("word", nf_word, "word in generator notation (quote negatives)");

    // kx
    auto* kx_cmd = app.add_subcommand("kx", "exchange-decomposition key agreement");
    kx_cmd->require_subcommand(1);
    auto* kxg = kx_cmd->add_subcommand("keygen", "derive a private key from a seed");
    std::string kxg_params, kxg_role, kxg_seed, kxg_out;
    kxg->add_option("--params", kxg_params)->required();
    kxg->add_option("--role", kxg_role)->required();
    kxg->add_option("--seed", kxg_seed, "hex seed")->required();
    kxg->add_option("--out", kxg_out)->required();
    auto* kxm = kx_cmd->add_subcommand("message", "emit the transformed tuple");
    std::string kxm_priv, kxm_out;
    kxm->add_option("--priv", kxm_priv)->required();
    kxm->add_option("--out", kxm_out)->required();
    auto* kxf = kx_cmd->add_subcommand("finish", "derive the session key from a peer message");
    std::string kxf_priv, kxf_msg;
    kxf->add_option("--priv", kxf_priv)->required();
    kxf->add_option("--msg", kxf_msg)->required();

    // pke
    auto* pke_cmd = app.add_subcommand("pke", "public-key encryption");
    pke_cmd->require_subcommand(1);
    auto* pkg = pke_cmd->add_subcommand("keygen", "generate a key pair");
    std::string pkg_params, pkg_seed, pkg_pub, pkg_sec;
    int pkg_d = 0;
    pkg->add_option("--params", pkg_params)->required();
    pkg->add_option("--d", pkg_d)->required();
    pkg->add_option("--seed", pkg_seed)->required();
    pkg->add_option("--pub", pkg_pub)->required();
    pkg->add_option("--sec", pkg_sec)->required();
    auto* pke_enc = pke_cmd->add_subcommand("encrypt", "encrypt a file");
    std::string enc_pub, enc_in, enc_seed, enc_out;
    bool enc_b64 = false;
    pke_enc->add_option("--pub", enc_pub)->required();
    pke_enc->add_option("--in", enc_in)->required();
    pke_enc->add_option("--seed", enc_seed)->required();
    pke_enc->add_option("--out", enc_out)->required();
    pke_enc->add_flag("--b64", enc_b64, "write base64 text instead of binary");
    auto* pke_dec = pke_cmd->add_subcommand("decrypt", "decrypt a file");
    std::string dec_sec, dec_pub, dec_in, dec_out;
    pke_dec->add_option("--sec", dec_sec)->required();
    pke_dec->add_option("--pub", dec_pub)->required();
    pke_dec->add_option("--in", dec_in)->required();
    pke_dec->add_option("--out", dec_out)->required();

    // attack
    auto* attack_cmd = app.add_subcommand("attack", "brute-force analysis tools");
    attack_cmd->require_subcommand(1);
    auto* edp = attack_cmd->add_subcommand("edp-brute", "enumerate decompositions");
    std::string edp_instance;
    int edp_maxlen = 0;
    edp->add_option("--instance", edp_instance)->required();
    edp->add_option("--maxlen", edp_maxlen)->required();

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "loopback handshake demo");
    demo_cmd->require_subcommand(1);
    auto* serve = demo_cmd->add_subcommand("serve", "respond to handshakes");
    std::string srv_params, srv_seed;
    int srv_port = 0;
    bool srv_once = false;
    serve->add_option("--port", srv_port)->required();
    serve->add_option("--params", srv_params)->required();
    serve->add_option("--seed", srv_seed)->required();
    serve->add_flag("--once", srv_once, "exit after one session");
    auto* connect = demo_cmd->add_subcommand("connect", "initiate one handshake");
    std::string con_host, con_params, con_seed;
    int con_port = 0;
    connect->add_option("--host", con_host)->required();
    connect->add_option("--port", con_port)->required();
    connect->add_option("--params", con_params)->required();
    connect->add_option("--seed", con_seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nf_cmd->parsed()) return run_nf(nf_strands, nf_word);
        if (kxg->parsed()) return run_kx_keygen(kxg_params, kxg_role, kxg_seed, kxg_out);
        if (kxm->parsed()) return run_kx_message(kxm_priv, kxm_out);
        if (kxf->parsed()) return run_kx_finish(kxf_priv, kxf_msg);
        if (pkg->parsed()) return run_pke_keygen(pkg_params, pkg_d, pkg_seed, pkg_pub, pkg_sec);
        if (pke_enc->parsed()) return run_pke_encrypt(enc_pub, enc_in, enc_seed, enc_out, enc_b64);
        if (pke_dec->parsed()) return run_pke_decrypt(dec_sec, dec_pub, dec_in, dec_out);
        if (edp->parsed()) return run_attack_edp(edp_instance, edp_maxlen);
        if (serve->parsed()) {
            if (srv_port < 0 || srv_port > 65535) throw bc::BadParameter("bad port");
            return bc::net::serve(static_cast<uint16_t>(srv_port),
                                  load_kx_params(srv_params), parse_seed(srv_seed),
                                  srv_once, std::cout);
        }
        if (connect->parsed()) {
            if (con_port < 1 || con_port > 65535) throw bc::BadParameter("bad port");
            return bc::net::connect_peer(con_host, static_cast<uint16_t>(con_port),
                                         load_kx_params(con_params), parse_seed(con_seed),
                                         std::cout);
        }
    } catch (const bc::ProtocolError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
