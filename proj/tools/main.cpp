#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cbkap/attack.hpp"
#include "cbkap/codec.hpp"
#include "wire.hpp"

namespace {

using namespace cbkap;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitProtocol = 3;

// Per-role seed offsets so one experiment seed drives every derived stream.
constexpr std::uint64_t kSeedAlice = 1;
constexpr std::uint64_t kSeedBob = 2;
constexpr std::uint64_t kSeedSpurious = 3;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

MMode parse_mode(const std::string& s) {
    if (s == "defended") return MMode::defended;
    if (s == "baseline") return MMode::baseline;
    throw UsageError("--mode must be 'defended' or 'baseline'");
}

Side parse_side(const std::string& s) {
    if (s == "alice") return Side::alice;
    if (s == "bob") return Side::bob;
    throw UsageError("--side must be 'alice' or 'bob'");
}

struct AttackOutcome {
    std::size_t solution_dim;
    std::size_t defense_floor;
    bool succeeded;
    long long wall_ms;
};

AttackOutcome run_attack(const PublicParams& params, const PublicKey& pub_b,
                         std::size_t spurious_count, std::uint64_t seed,
                         const PrivateKey* truth) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto spurious = gen_spurious(params, spurious_count, seed);
    const auto equations = assemble_equations(params, pub_b, spurious);
    const auto basis = recover_space(equations, params.n);
    const AttackReport report = attack_report(params, basis, truth);
    const auto t1 = std::chrono::steady_clock::now();
    return {report.solution_dim, report.defense_floor, report.succeeded,
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()};
}

int cmd_setup(const ParamsConfig& cfg, const std::string& out, bool json) {
    const PublicParams params = ttp_setup(cfg);
    write_file(out, serialize(params));
    if (json) std::cout << to_json_text(params) << "\n";
    return 0;
}

int cmd_keygen(const std::string& params_path, const std::string& side, std::uint64_t seed,
               const std::string& out) {
    const PublicParams params = deserialize_params(read_file(params_path));
    write_file(out, serialize(keygen(params, parse_side(side), seed)));
    return 0;
}

int cmd_pubkey(const std::string& params_path, const std::string& key_path,
               const std::string& out) {
    const PublicParams params = deserialize_params(read_file(params_path));
    const PrivateKey sk = deserialize_private_key(read_file(key_path));
    write_file(out, serialize(public_key(params, sk)));
    return 0;
}

int cmd_exchange(const std::string& params_path, const std::string& key_path,
                 const std::string& peer_path, const std::string& out) {
    const PublicParams params = deserialize_params(read_file(params_path));
    const PrivateKey sk = deserialize_private_key(read_file(key_path));
    const PublicKey peer = deserialize_public_key(read_file(peer_path));
    write_file(out, serialize(shared_secret(params, sk, peer)));
    return 0;
}

int cmd_attack(const std::string& params_path, const std::string& peer_path,
               std::size_t spurious_count, std::uint64_t seed, const std::string& truth_path) {
    const PublicParams params = deserialize_params(read_file(params_path));
    const PublicKey pub_b = deserialize_public_key(read_file(peer_path));
    PrivateKey truth{Side::bob, Matrix(params.field, 1, 1), {}, {}};
    const PrivateKey* truth_ptr = nullptr;
    if (!truth_path.empty()) {
        truth = deserialize_private_key(read_file(truth_path));
        truth_ptr = &truth;
    }
    const AttackOutcome o = run_attack(params, pub_b, spurious_count, seed, truth_ptr);
    nlohmann::json j{{"mode", params.m_mode == MMode::defended ? "defended" : "baseline"},
                     {"n", params.n},
                     {"p", params.field.p()},
                     {"seed", seed},
                     {"spuriousCount", spurious_count},
                     {"solutionDim", o.solution_dim},
                     {"defenseFloor", o.defense_floor},
                     {"succeeded", o.succeeded},
                     {"wallTimeMs", o.wall_ms}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_sweep(std::size_t n, std::uint32_t p, std::size_t trials, std::size_t spurious_count,
              std::uint64_t base_seed, const std::string& out) {
    std::ostringstream csv;
    csv << "seed,mode,solutionDim,succeeded\n";
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t seed = base_seed + t;
        for (MMode mode : {MMode::defended, MMode::baseline}) {
            ParamsConfig cfg;
            cfg.n = n;
            cfg.p = p;
            cfg.m_mode = mode;
            cfg.seed = seed;
            const PublicParams params = ttp_setup(cfg);
            const PrivateKey bob = keygen(params, Side::bob, seed + kSeedBob);
            const PublicKey pub_b = public_key(params, bob);
            const AttackOutcome o =
                run_attack(params, pub_b, spurious_count, seed + kSeedSpurious, &bob);
            csv << seed << ',' << (mode == MMode::defended ? "defended" : "baseline") << ','
                << o.solution_dim << ',' << (o.succeeded ? "true" : "false") << '\n';
        }
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        const std::string s = csv.str();
        write_file(out, std::vector<std::uint8_t>(s.begin(), s.end()));
    }
    return 0;
}

int cmd_socket(bool is_server, const std::string& params_path, const std::string& key_path,
               std::uint16_t port, const std::string& host, const std::string& out) {
    const std::vector<std::uint8_t> params_bytes = read_file(params_path);
    const PublicParams params = deserialize_params(params_bytes);
    const PrivateKey sk = deserialize_private_key(read_file(key_path));
    const std::vector<std::uint8_t> own_pub = serialize(public_key(params, sk));

    const std::vector<std::uint8_t> peer_bytes =
        is_server ? wire::serve_exchange(port, params_bytes, own_pub)
                  : wire::connect_exchange(host, port, params_bytes, own_pub);
    const PublicKey peer = deserialize_public_key(peer_bytes);
    write_file(out, serialize(shared_secret(params, sk, peer)));
    return 0;
}

std::pair<std::string, std::uint16_t> split_host_port(const std::string& s) {
    const std::size_t colon = s.rfind(':');
    if (colon == std::string::npos || colon + 1 == s.size()) {
        throw UsageError("--host must be HOST:PORT");
    }
    const unsigned long port = std::stoul(s.substr(colon + 1));
    if (port == 0 || port > 0xffff) throw UsageError("port out of range");
    return {s.substr(0, colon), static_cast<std::uint16_t>(port)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored Burau key agreement, the KTT linear-algebra attack, and its defense"};
    app.require_subcommand(1);

    // setup
    ParamsConfig cfg;
    std::string mode_str = "defended";
    std::string out_path, params_path, key_path, peer_path, truth_path, host_str;
    std::uint64_t seed = 0;
    bool emit_json = false;
    auto* setup = app.add_subcommand("setup", "Generate public parameters (TTP role)");
    setup->add_option("--n", cfg.n, "Strand count (even)")->capture_default_str();
    setup->add_option("--p", cfg.p, "Field prime")->capture_default_str();
    setup->add_option("--seed", cfg.seed, "Setup seed")->capture_default_str();
    setup->add_option("--mode", mode_str, "defended|baseline")->capture_default_str();
    setup->add_option("--word-len", cfg.word_len_keys, "Private-word generator count")
        ->capture_default_str();
    setup->add_option("--deg-m", cfg.deg_m, "Powers of Pi(beta) summed (0 = n)")
        ->capture_default_str();
    setup->add_option("--beta-len", cfg.beta_len, "Target beta length")->capture_default_str();
    setup->add_flag("--test-mode", cfg.test_mode, "Allow n >= 4");
    setup->add_flag("--json", emit_json, "Also print the params as JSON");
    setup->add_option("--out", out_path, "Output params file")->required();

    auto* kg = app.add_subcommand("keygen", "Generate a private key");
    std::string side_str;
    kg->add_option("--params", params_path)->required();
    kg->add_option("--side", side_str, "alice|bob")->required();
    kg->add_option("--seed", seed)->required();
    kg->add_option("--out", out_path)->required();

    auto* pub = app.add_subcommand("pubkey", "Derive the public key of a private key");
    pub->add_option("--params", params_path)->required();
    pub->add_option("--key", key_path)->required();
    pub->add_option("--out", out_path)->required();

    auto* ex = app.add_subcommand("exchange", "Compute the shared secret offline");
    ex->add_option("--params", params_path)->required();
    ex->add_option("--key", key_path)->required();
    ex->add_option("--peer", peer_path, "Peer public-key file")->required();
    ex->add_option("--out", out_path)->required();

    std::size_t spurious_count = 10;
    auto* atk = app.add_subcommand("attack", "Run the linear-algebra key-recovery attack");
    atk->add_option("--params", params_path)->required();
    atk->add_option("--peer", peer_path, "Bob's public-key file")->required();
    atk->add_option("--spurious", spurious_count)->capture_default_str();
    atk->add_option("--seed", seed)->capture_default_str();
    atk->add_option("--truth", truth_path, "Bob's private key, for the scalar check");

    std::size_t trials = 10, sweep_n = 8;
    std::uint32_t sweep_p = 251;
    auto* sweep = app.add_subcommand("sweep", "Seeded attack batches over both modes (CSV)");
    sweep->add_option("--n", sweep_n)->capture_default_str();
    sweep->add_option("--p", sweep_p)->capture_default_str();
    sweep->add_option("--trials", trials)->capture_default_str();
    sweep->add_option("--spurious", spurious_count)->capture_default_str();
    sweep->add_option("--seed", seed)->capture_default_str();
    sweep->add_option("--out", out_path, "CSV file (default stdout)");

    std::uint16_t listen_port = 0;
    auto* srv = app.add_subcommand("serve", "Accept one key exchange over TCP");
    srv->add_option("--params", params_path)->required();
    srv->add_option("--key", key_path)->required();
    srv->add_option("--listen", listen_port)->required();
    srv->add_option("--out", out_path)->required();

    auto* cli = app.add_subcommand("connect", "Run a key exchange against a server");
    cli->add_option("--params", params_path)->required();
    cli->add_option("--key", key_path)->required();
    cli->add_option("--host", host_str, "HOST:PORT")->required();
    cli->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*setup) {
            cfg.m_mode = parse_mode(mode_str);
            return cmd_setup(cfg, out_path, emit_json);
        }
        if (*kg) return cmd_keygen(params_path, side_str, seed, out_path);
        if (*pub) return cmd_pubkey(params_path, key_path, out_path);
        if (*ex) return cmd_exchange(params_path, key_path, peer_path, out_path);
        if (*atk) return cmd_attack(params_path, peer_path, spurious_count, seed, truth_path);
        if (*sweep) return cmd_sweep(sweep_n, sweep_p, trials, spurious_count, seed, out_path);
        if (*srv) return cmd_socket(true, params_path, key_path, listen_port, "", out_path);
        if (*cli) {
            auto [host, port] = split_host_port(host_str);
            return cmd_socket(false, params_path, key_path, port, host, out_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wire::WireError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProtocol;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitProtocol;
    }
    return kExitUsage;
}
