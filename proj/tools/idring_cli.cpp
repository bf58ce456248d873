// idring: command-line front end.
//
// Exit status: 0 success or valid signature, 1 invalid signature,
// 2 usage, I/O or format error (one line on stderr).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "idring/idring.hpp"

namespace fs = std::filesystem;
using namespace idring;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& text, bool secret) {
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write " + path);
        out << text;
        if (!out) throw UsageError("cannot write " + path);
    }
    if (secret) {
        std::error_code ec;
        fs::permissions(path, fs::perms::owner_read | fs::perms::owner_write, fs::perm_options::replace, ec);
    }
}

void write_artifact(const std::string& path, const Artifact& a, bool secret) {
    write_file(path, armor(a) + "\n", secret);
}

template <typename T>
T load(const std::string& path) {
    try {
        return decode_as<T>(dearmor(read_file(path)));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    if (!list.empty() && list.back() == ',') out.emplace_back();
    return out;
}

RingDescriptor parse_ring(const std::string& list) {
    std::vector<std::string> names = split_list(list);
    return RingDescriptor::from_strings(names);
}

std::vector<BasePoint> load_public_keys(const std::string& list) {
    std::vector<BasePoint> out;
    for (const std::string& path : split_list(list)) {
        if (path.empty()) throw UsageError("empty entry in --proxy-pks");
        out.push_back(load<PublicKey>(path).point);
    }
    return out;
}

// Randomness for signing and key generation; --seed makes runs reproducible
// and is unsafe outside testing.
struct RandomSource {
    std::string seed_hex;

    Rng make() const {
        if (seed_hex.empty()) return Rng::from_entropy();
        return Rng(ByteView(from_hex(seed_hex)));
    }
};

void emit_signature(const std::string& out, const Artifact& sig) {
    if (out.empty())
        std::cout << armor(sig) << "\n";
    else
        write_artifact(out, sig, false);
}

int report(bool valid) {
    std::cout << (valid ? "signature valid" : "signature invalid") << "\n";
    return valid ? 0 : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ID-based ring signatures and proxy ring signatures over BLS12-381", "idring"};
    app.require_subcommand(1);
    app.fallthrough();

    RandomSource random;
    app.add_option("--seed", random.seed_hex, "hex seed for deterministic randomness (insecure, for test vectors)");

    std::string params_path, master_path, id, ring_list, signer, key_path, msg_path, sig_path, warrant_path,
        token_path, original_pk_path, proxy_pks, out_path;
    std::size_t max_n = 8;
    bool csv = false;

    auto* setup_cmd = app.add_subcommand("setup", "create system parameters and a master key");
    setup_cmd->add_option("--params", params_path, "output: public parameters")->required();
    setup_cmd->add_option("--master", master_path, "output: master secret key")->required();

    auto* extract_cmd = app.add_subcommand("extract", "derive the secret key of an identity");
    extract_cmd->add_option("--master", master_path, "master secret key")->required();
    extract_cmd->add_option("--id", id, "identity string")->required();
    extract_cmd->add_option("--out", out_path, "output: identity secret key")->required();

    auto* sign_cmd = app.add_subcommand("sign", "ring-sign a message");
    sign_cmd->add_option("--params", params_path)->required();
    sign_cmd->add_option("--ring", ring_list, "comma-separated identities, in order")->required();
    sign_cmd->add_option("--signer", signer, "identity of the signer")->required();
    sign_cmd->add_option("--key", key_path, "signer's identity secret key")->required();
    sign_cmd->add_option("--msg", msg_path, "message file")->required();
    sign_cmd->add_option("--out", out_path, "signature file (default: hex on stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "verify a ring signature");
    verify_cmd->add_option("--params", params_path)->required();
    verify_cmd->add_option("--msg", msg_path)->required();
    verify_cmd->add_option("--sig", sig_path)->required();
    verify_cmd->add_option("--ring", ring_list, "expected ring; defaults to the one in the signature");

    auto* keygen_cmd = app.add_subcommand("keygen", "create a long-term key pair (writes OUT and OUT.pub)");
    keygen_cmd->add_option("--params", params_path)->required();
    keygen_cmd->add_option("--out", out_path)->required();

    auto* delegate_cmd = app.add_subcommand("delegate", "issue a delegation token for a warrant");
    delegate_cmd->add_option("--key", key_path, "original signer's long-term key")->required();
    delegate_cmd->add_option("--warrant", warrant_path, "warrant file")->required();
    delegate_cmd->add_option("--out", out_path)->required();

    auto* pkg_cmd = app.add_subcommand("proxy-keygen", "check a token and derive a proxy signing key");
    pkg_cmd->add_option("--params", params_path)->required();
    pkg_cmd->add_option("--token", token_path)->required();
    pkg_cmd->add_option("--key", key_path, "proxy's long-term key")->required();
    pkg_cmd->add_option("--original-pk", original_pk_path)->required();
    pkg_cmd->add_option("--out", out_path)->required();

    auto* psign_cmd = app.add_subcommand("proxy-sign", "sign on behalf of the original signer");
    psign_cmd->add_option("--params", params_path)->required();
    psign_cmd->add_option("--original-pk", original_pk_path)->required();
    psign_cmd->add_option("--proxy-pks", proxy_pks, "comma-separated proxy public key files, in order")->required();
    psign_cmd->add_option("--key", key_path, "proxy signing key")->required();
    psign_cmd->add_option("--warrant", warrant_path)->required();
    psign_cmd->add_option("--msg", msg_path)->required();
    psign_cmd->add_option("--out", out_path);

    auto* pverify_cmd = app.add_subcommand("proxy-verify", "verify a proxy ring signature");
    pverify_cmd->add_option("--params", params_path)->required();
    pverify_cmd->add_option("--original-pk", original_pk_path)->required();
    pverify_cmd->add_option("--proxy-pks", proxy_pks)->required();
    pverify_cmd->add_option("--warrant", warrant_path)->required();
    pverify_cmd->add_option("--msg", msg_path)->required();
    pverify_cmd->add_option("--sig", sig_path)->required();

    auto* bench_cmd = app.add_subcommand("bench", "operation counts against the reference cost formulas");
    bench_cmd->add_option("--max-n", max_n)->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    bench_cmd->add_flag("--csv", csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (*setup_cmd) {
            Rng rng = random.make();
            const KgcSetup kgc = setup(rng);
            write_artifact(params_path, kgc.params, false);
            write_artifact(master_path, kgc.master, true);
            std::cout << "wrote " << params_path << " and " << master_path << "\n";
        } else if (*extract_cmd) {
            write_artifact(out_path, extract(load<MasterKey>(master_path), as_view(id)), true);
            std::cout << "wrote key for " << id << " to " << out_path << "\n";
        } else if (*sign_cmd) {
            const auto params = load<SystemParams>(params_path);
            const RingDescriptor ring = parse_ring(ring_list);
            const std::size_t slot = ring.index_of(as_view(signer));
            if (slot == ring.size()) throw UsageError("signer " + signer + " is not in the ring");
            const auto key = load<IdentitySecretKey>(key_path);
            Rng rng = random.make();
            emit_signature(out_path, ring_sign(params, ring, slot, key, read_file(msg_path), rng));
        } else if (*verify_cmd) {
            const auto params = load<SystemParams>(params_path);
            const auto sig = load<RingSignature>(sig_path);
            if (!ring_list.empty() && !(parse_ring(ring_list) == sig.ring)) return report(false);
            return report(ring_verify(params, sig.ring, read_file(msg_path), sig));
        } else if (*keygen_cmd) {
            const auto params = load<SystemParams>(params_path);
            Rng rng = random.make();
            const LongTermKeyPair kp = generate_long_term_key(params, rng);
            write_artifact(out_path, kp, true);
            write_artifact(out_path + ".pub", PublicKey{kp.public_key}, false);
            std::cout << "wrote " << out_path << " and " << out_path << ".pub\n";
        } else if (*delegate_cmd) {
            write_artifact(out_path, delegate(load<LongTermKeyPair>(key_path), read_file(warrant_path)), false);
            std::cout << "wrote " << out_path << "\n";
        } else if (*pkg_cmd) {
            const auto params = load<SystemParams>(params_path);
            const auto proxy = proxy_key_gen(params, load<DelegationToken>(token_path), load<LongTermKeyPair>(key_path),
                                             load<PublicKey>(original_pk_path).point);
            write_artifact(out_path, proxy, true);
            std::cout << "wrote " << out_path << "\n";
        } else if (*psign_cmd) {
            const auto params = load<SystemParams>(params_path);
            const BasePoint original = load<PublicKey>(original_pk_path).point;
            const auto proxies = load_public_keys(proxy_pks);
            const auto key = load<ProxyKeyPair>(key_path);
            const auto slot = find_proxy_slot(original, proxies, key);
            if (!slot) throw UsageError("proxy key does not belong to any listed proxy");
            Rng rng = random.make();
            emit_signature(out_path, proxy_ring_sign(params, original, proxies, *slot, key, read_file(warrant_path),
                                                     read_file(msg_path), rng));
        } else if (*pverify_cmd) {
            const auto params = load<SystemParams>(params_path);
            const auto sig = load<ProxyRingSignature>(sig_path);
            const auto proxies = load_public_keys(proxy_pks);
            if (proxies.size() != sig.c.size()) return report(false);
            return report(proxy_ring_verify(params, load<PublicKey>(original_pk_path).point, proxies,
                                            read_file(warrant_path), read_file(msg_path), sig));
        } else if (*bench_cmd) {
            std::cout << format_cost_report(cost_report(max_n), csv);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
