// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "artifact_world.hpp"

using namespace idring;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Fixture {
    KgcSetup kgc;
    RingDescriptor ring;
    std::vector<IdentitySecretKey> keys;

    Fixture(Rng& rng, std::size_t r, std::string_view prefix = "member")
        : kgc(setup(rng)), ring(RingDescriptor::from_strings(oracle::member_names(r, prefix))) {
        for (const Bytes& id : ring.members()) keys.push_back(extract(kgc.master, id));
    }
};

struct ProxyFixture {
    KgcSetup kgc;
    LongTermKeyPair original;
    std::vector<LongTermKeyPair> proxies;
    std::vector<BasePoint> publics;
    Bytes warrant;
    std::vector<ProxyKeyPair> keys;

    ProxyFixture(Rng& rng, std::size_t n)
        : kgc(setup(rng)), original(generate_long_term_key(kgc.params, rng)),
          warrant(oracle::random_bytes(rng, 8 + rng.uniform(32))) {
        const DelegationToken token = delegate(original, warrant);
        for (std::size_t i = 0; i < n; ++i) {
            proxies.push_back(generate_long_term_key(kgc.params, rng));
            publics.push_back(proxies.back().public_key);
            keys.push_back(proxy_key_gen(kgc.params, token, proxies.back(), original.public_key));
        }
    }

    ProxyRingSignature sign(std::size_t k, ByteView m, Rng& rng, SignDebugTrace* trace = nullptr) const {
        return proxy_ring_sign(kgc.params, original.public_key, publics, k, keys[k], warrant, m, rng, trace);
    }
    bool verify(ByteView m, const ProxyRingSignature& sig, const BasePoint* pk = nullptr,
                const Bytes* w = nullptr) const {
        return proxy_ring_verify(kgc.params, pk ? *pk : original.public_key, publics, w ? *w : warrant, m, sig);
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1. IDBRS round trip over the ring-size grid plus random instances.
Outcome round_trip() {
    const auto start = Clock::now();
    Rng rng(1001);
    std::size_t runs = 0, failures = 0;
    for (std::size_t r : {1, 2, 3, 5, 8}) {
        Fixture f(rng, r);
        for (std::size_t k = 0; k < r; ++k) {
            const Bytes m = oracle::random_bytes(rng, 32);
            ++runs;
            if (!ring_verify(f.kgc.params, f.ring, m, ring_sign(f.kgc.params, f.ring, k, f.keys[k], m, rng)))
                ++failures;
        }
    }
    const KgcSetup kgc = setup(rng);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng.uniform(8);
        std::vector<Bytes> ids;
        for (std::size_t i = 0; i < r; ++i) {
            Bytes id = oracle::random_bytes(rng, 1 + rng.uniform(16));
            id.push_back(static_cast<std::uint8_t>(i));
            ids.push_back(id);
        }
        const RingDescriptor ring(ids);
        const std::size_t k = rng.uniform(r);
        const Bytes m = oracle::random_bytes(rng, rng.uniform(200));
        ++runs;
        if (!ring_verify(kgc.params, ring, m, ring_sign(kgc.params, ring, k, extract(kgc.master, ring[k]), m, rng)))
            ++failures;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {failures == 0 && secs < 60.0, fmt("%zu/%zu verified, %.1f s (limit 60 s)", runs - failures, runs, secs)};
}

// 2. Pairing counts for both schemes.
Outcome pairing_counts() {
    std::size_t bad = 0;
    std::string sign_ids, sign_proxy;
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto rs = measure_ring_sign(n).pairings, rv = measure_ring_verify(n).pairings;
        const auto ps = measure_proxy_sign(n).pairings, pv = measure_proxy_verify(n).pairings;
        if (rs != 2 * n - 1 || rv != 2 || ps != 2 * n - 1 || pv != 2) ++bad;
        sign_ids += (n > 1 ? "," : "") + std::to_string(rs);
        sign_proxy += (n > 1 ? "," : "") + std::to_string(ps);
    }
    return {bad == 0, "sign " + sign_ids + " / proxy sign " + sign_proxy + ", verify 2 for n=1..8"};
}

// 3. Every cyclic link holds and implies the aggregate check.
Outcome link_equivalence() {
    Rng rng(1003);
    std::size_t counterexamples = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng.uniform(6);
        Fixture f(rng, r);
        const Bytes m = oracle::random_bytes(rng, 24);
        SignDebugTrace trace;
        const std::size_t k = rng.uniform(r);
        const auto honest = ring_sign(f.kgc.params, f.ring, k, f.keys[k], m, rng, &trace);
        const bool links = oracle::link_check(f.kgc.params, f.ring, m, trace, honest);
        if (!links || !ring_verify(f.kgc.params, f.ring, m, honest)) ++counterexamples;
    }
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.uniform(6);
        ProxyFixture f(rng, n);
        const Bytes m = oracle::random_bytes(rng, 24);
        SignDebugTrace trace;
        const auto sig = f.sign(rng.uniform(n), m, rng, &trace);
        const bool links =
            oracle::proxy_link_check(f.kgc.params, f.original.public_key, f.publics, f.warrant, m, trace, sig);
        if (!links || !f.verify(m, sig)) ++counterexamples;
    }
    return {counterexamples == 0, fmt("%zu counterexamples over 100 + 100 instances", counterexamples)};
}

// 4. Tamper classes, 20 trials each.
Outcome tamper() {
    Rng rng(1004);
    const TargetElem g = pairing(BasePoint::generator(), KeyPoint::generator());
    std::map<std::string, std::pair<int, int>> tally;  // class -> (rejected, total)
    auto record = [&](const std::string& cls, bool accepted) {
        auto& t = tally[cls];
        t.second++;
        if (!accepted) t.first++;
    };
    Fixture f(rng, 4);
    ProxyFixture pf(rng, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const Bytes m = oracle::random_bytes(rng, 20);
        const std::size_t k = rng.uniform(4);
        const auto sig = ring_sign(f.kgc.params, f.ring, k, f.keys[k], m, rng);
        Bytes m2 = m;
        m2[rng.uniform(m2.size())] ^= 0x20;
        record("message", ring_verify(f.kgc.params, f.ring, m2, sig));

        auto members = f.ring.members();
        members[rng.uniform(4)] = oracle::random_bytes(rng, 9);
        RingSignature swapped = sig;
        swapped.ring = RingDescriptor(members);
        record("ring identity", ring_verify(f.kgc.params, m, swapped));

        for (std::size_t i = 0; i < 4; ++i) {
            RingSignature bad = sig;
            bad.c[i] = bad.c[i] * g;
            record("c_" + std::to_string(i + 1), ring_verify(f.kgc.params, f.ring, m, bad));
        }
        RingSignature bad_t = sig;
        bad_t.t = bad_t.t + random_key_point(rng);
        record("T", ring_verify(f.kgc.params, f.ring, m, bad_t));

        const auto psig = pf.sign(rng.uniform(4), m, rng);
        Bytes w2 = pf.warrant;
        w2[rng.uniform(w2.size())] ^= 0x01;
        record("warrant", pf.verify(m, psig, nullptr, &w2));
        const BasePoint wrong_pk = generate_long_term_key(pf.kgc.params, rng).public_key;
        record("wrong PK_o", pf.verify(m, psig, &wrong_pk));
        record("proxy message", pf.verify(m2, psig));
    }
    bool pass = tally.size() >= 6;
    std::string detail;
    for (const auto& [cls, t] : tally) {
        pass = pass && t.first == t.second && t.second == 20;
        detail += (detail.empty() ? "" : ", ") + cls + " " + std::to_string(t.first) + "/" + std::to_string(t.second);
    }
    return {pass, fmt("%zu classes: ", tally.size()) + detail};
}

// 5. Signer ambiguity.
Outcome ambiguity() {
    Rng rng(1005);
    const std::size_t r = 4;
    Fixture f(rng, r);
    const Bytes m = to_bytes("fixed message for every member");
    std::set<std::size_t> lengths;
    bool all_verify = true;
    for (std::size_t k = 0; k < r; ++k) {
        const auto sig = ring_sign(f.kgc.params, f.ring, k, f.keys[k], m, rng);
        all_verify = all_verify && ring_verify(f.kgc.params, f.ring, m, sig);
        lengths.insert(encode(sig).size());
    }

    // Guess the signer from where the chain starts: the position after the
    // smallest ring value, and the first stored position.
    const int trials = 200;
    int hits_min = 0, hits_first = 0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t k = rng.uniform(r);
        const auto sig = ring_sign(f.kgc.params, f.ring, k, f.keys[k], m, rng);
        std::size_t smallest = 0;
        for (std::size_t i = 1; i < r; ++i)
            if (sig.c[i].to_bytes() < sig.c[smallest].to_bytes()) smallest = i;
        if ((smallest + r - 1) % r == k) ++hits_min;
        if (k == 0) ++hits_first;
    }
    const double p = 1.0 / r;
    const double bound = p + 4.0 * std::sqrt(p * (1 - p) / trials);
    const double rate_min = double(hits_min) / trials, rate_first = double(hits_first) / trials;
    const bool pass = all_verify && lengths.size() == 1 && rate_min <= bound && rate_first <= bound;
    return {pass, fmt("all %zu members verify, %zu distinct length(s); heuristic hit rates %.3f and %.3f (chance "
                      "%.2f, bound %.3f)",
                      r, lengths.size(), rate_min, rate_first, p, bound)};
}

// 6. Delegation.
Outcome delegation() {
    Rng rng(1006);
    const KgcSetup kgc = setup(rng);
    int honest_ok = 0, wrong_w_rejected = 0, wrong_pk_rejected = 0, keygen_refused = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        const auto original = generate_long_term_key(kgc.params, rng);
        const auto other = generate_long_term_key(kgc.params, rng);
        const auto proxy = generate_long_term_key(kgc.params, rng);
        const Bytes w = oracle::random_bytes(rng, 1 + rng.uniform(40));
        const DelegationToken token = delegate(original, w);
        if (delegation_verify(kgc.params, original.public_key, token)) ++honest_ok;

        DelegationToken wrong_w = token;
        wrong_w.warrant.push_back(0x2e);
        if (!delegation_verify(kgc.params, original.public_key, wrong_w)) ++wrong_w_rejected;
        if (!delegation_verify(kgc.params, other.public_key, token)) ++wrong_pk_rejected;

        bool refused = true;
        for (const auto& [tok, pk] : {std::pair{wrong_w, original.public_key}, std::pair{token, other.public_key}}) {
            try {
                (void)proxy_key_gen(kgc.params, tok, proxy, pk);
                refused = false;
            } catch (const Error& e) {
                refused = refused && e.code() == ErrorCode::InvalidDelegation;
            }
        }
        if (refused) ++keygen_refused;
    }
    const bool pass =
        honest_ok == trials && wrong_w_rejected == trials && wrong_pk_rejected == trials && keygen_refused == trials;
    return {pass, fmt("honest %d/%d accepted, wrong warrant %d/%d and wrong PK %d/%d rejected, keygen refused %d/%d",
                      honest_ok, trials, wrong_w_rejected, trials, wrong_pk_rejected, trials, keygen_refused, trials)};
}

// 7. Wire round trip and fuzzing.
Outcome wire() {
    oracle::World world(1007);
    std::map<ArtifactKind, int> ok;
    int mismatches = 0;
    std::vector<Bytes> corpus;
    for (int t = 0; t < 200; ++t) {
        for (const Artifact& a : world.one_of_each()) {
            const Bytes enc = encode(a);
            const Artifact back = decode(enc);
            if (back == a && encode(back) == enc && dearmor(as_view(armor(a))) == enc)
                ++ok[kind_of(a)];
            else
                ++mismatches;
            if (t < 4) corpus.push_back(enc);
        }
    }

    Rng rng(2007);
    const int fuzz = 10000;
    int rejected = 0, accepted = 0, other = 0;
    for (int i = 0; i < fuzz; ++i) {
        Bytes data;
        switch (i % 3) {
            case 0:
                data = oracle::random_bytes(rng, rng.uniform(900));
                break;
            case 1:
                data = oracle::random_bytes(rng, 6 + rng.uniform(900));
                std::copy(kWireMagic.begin(), kWireMagic.end(), data.begin());
                data[4] = kWireVersion;
                data[5] = static_cast<std::uint8_t>(1 + rng.uniform(9));
                break;
            default: {
                data = corpus[rng.uniform(corpus.size())];
                const std::size_t flips = 1 + rng.uniform(3);
                for (std::size_t f = 0; f < flips; ++f)
                    data[rng.uniform(data.size())] = static_cast<std::uint8_t>(rng.next_u64());
                if (rng.uniform(4) == 0) data.resize(rng.uniform(data.size() + 1));
            }
        }
        try {
            (void)decode(data);
            ++accepted;
        } catch (const Error&) {
            ++rejected;
        } catch (...) {
            ++other;
        }
    }
    bool pass = mismatches == 0 && ok.size() == 9 && other == 0;
    for (const auto& [kind, n] : ok) pass = pass && n == 200;
    return {pass, fmt("%zu kinds x 200 round-trips, %d mismatches; %d fuzz inputs: %d rejected, %d decoded, %d "
                      "unexpected exceptions",
                      ok.size(), mismatches, fuzz, rejected, accepted, other)};
}

// 8. Bilinearity and non-degeneracy against big-integer exponent arithmetic.
Outcome backend() {
    Rng rng(1008);
    const BasePoint P = BasePoint::generator();
    const KeyPoint Q = KeyPoint::generator();
    const TargetElem g = pairing(P, Q);
    int ok = 0;
    const int trials = 128;
    for (int t = 0; t < trials; ++t) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng);
        const bool bilinear = pairing(a * P, b * Q) == gt_pow(g, oracle::mul_mod(a, b));
        const bool left = pairing(a * P, Q) == gt_pow(g, a) && pairing(P, b * Q) == gt_pow(g, b);
        const bool nondegenerate = !pairing(a * P, b * Q).is_one();
        if (bilinear && left && nondegenerate) ++ok;
    }
    return {ok == trials && !g.is_one(), fmt("%d/%d trials", ok, trials)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"identity-based ring round trip", round_trip},
        {"pairing counts 2n-1 / 2", pairing_counts},
        {"per-link equations imply aggregate check", link_equivalence},
        {"tamper rejection", tamper},
        {"signer ambiguity", ambiguity},
        {"delegation", delegation},
        {"wire round trip and fuzzing", wire},
        {"pairing backend properties", backend},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
