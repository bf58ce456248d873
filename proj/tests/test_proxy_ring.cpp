#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace idring;

namespace {

struct ProxyFixture {
    KgcSetup kgc;
    LongTermKeyPair original;
    std::vector<LongTermKeyPair> proxies;
    std::vector<BasePoint> publics;
    Bytes warrant;
    DelegationToken token;
    std::vector<ProxyKeyPair> keys;

    ProxyFixture(Rng& rng, std::size_t n, std::string_view w = "delegate signing of purchase orders, 2026-Q4")
        : kgc(setup(rng)), original(generate_long_term_key(kgc.params, rng)), warrant(to_bytes(w)),
          token(delegate(original, warrant)) {
        for (std::size_t i = 0; i < n; ++i) {
            proxies.push_back(generate_long_term_key(kgc.params, rng));
            publics.push_back(proxies.back().public_key);
            keys.push_back(proxy_key_gen(kgc.params, token, proxies.back(), original.public_key));
        }
    }

    ProxyRingSignature sign(std::size_t k, ByteView m, Rng& rng, SignDebugTrace* trace = nullptr,
                            ExpStrategy s = ExpStrategy::FoldIntoScalars) const {
        return proxy_ring_sign(kgc.params, original.public_key, publics, k, keys[k], warrant, m, rng, trace, s);
    }

    bool verify(ByteView m, const ProxyRingSignature& sig) const {
        return proxy_ring_verify(kgc.params, original.public_key, publics, warrant, m, sig);
    }
};

}  // namespace

TEST_SUITE("proxy_ring") {
    TEST_CASE("delegation with unit secrets") {
        Rng rng(60);
        const KgcSetup kgc = setup(rng);
        const LongTermKeyPair one = long_term_key_from_secret(kgc.params, Scalar::one());
        const DelegationToken token = delegate(one, as_view("w"));
        CHECK(token.x_ow == warrant_point(as_view("w")));
        CHECK(delegation_verify(kgc.params, one.public_key, token));

        const ProxyKeyPair key = proxy_key_gen(kgc.params, token, one, one.public_key);
        CHECK(key.secret_point == Scalar::from_u64(2) * warrant_point(as_view("w")));
        CHECK(key.combined_public == Scalar::from_u64(2) * BasePoint::generator());
    }

    TEST_CASE("delegation tokens") {
        Rng rng(61);
        ProxyFixture f(rng, 2);
        CHECK(delegation_verify(f.kgc.params, f.original.public_key, f.token));
        CHECK_FALSE(delegate(f.original, as_view("other warrant")).x_ow == f.token.x_ow);

        DelegationToken wrong_warrant = f.token;
        wrong_warrant.warrant = to_bytes("delegate signing of everything, forever");
        CHECK_FALSE(delegation_verify(f.kgc.params, f.original.public_key, wrong_warrant));

        const LongTermKeyPair stranger = generate_long_term_key(f.kgc.params, rng);
        CHECK_FALSE(delegation_verify(f.kgc.params, stranger.public_key, f.token));

        try {
            (void)delegate(f.original, Bytes{});
            FAIL("empty warrant accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EmptyWarrant);
        }
    }

    TEST_CASE("proxy key invariant over random key pairs") {
        Rng rng(62);
        const KgcSetup kgc = setup(rng);
        for (int i = 0; i < 20; ++i) {
            const auto o = generate_long_term_key(kgc.params, rng);
            const auto p = generate_long_term_key(kgc.params, rng);
            const Bytes w = oracle::random_bytes(rng, 1 + rng.uniform(30));
            const auto key = proxy_key_gen(kgc.params, delegate(o, w), p, o.public_key);
            CHECK(pairing(key.combined_public, warrant_point(w)) == pairing(kgc.params.base_generator, key.secret_point));
        }
    }

    TEST_CASE("proxy key generation refuses invalid tokens") {
        Rng rng(63);
        ProxyFixture f(rng, 1);
        DelegationToken forged = f.token;
        forged.x_ow = forged.x_ow + KeyPoint::generator();
        try {
            (void)proxy_key_gen(f.kgc.params, forged, f.proxies[0], f.original.public_key);
            FAIL("tampered token accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidDelegation);
            CHECK(std::string(e.what()) == "invalid delegation");
        }
        CHECK_THROWS_AS(proxy_key_gen(f.kgc.params, f.token, f.proxies[0], f.proxies[0].public_key), Error);
    }

    TEST_CASE("single proxy ring") {
        Rng rng(64);
        ProxyFixture f(rng, 1);
        SignDebugTrace trace;
        const auto sig = f.sign(0, as_view("m"), rng, &trace);
        CHECK(sig.c[0] == pairing(f.kgc.params.base_generator, trace.a));
        CHECK(f.verify(as_view("m"), sig));
    }

    TEST_CASE("per-link equations hold for n = 3, signer 2") {
        Rng rng(65);
        ProxyFixture f(rng, 3);
        SignDebugTrace trace;
        const auto sig = f.sign(2, as_view("order #17"), rng, &trace);
        CHECK(oracle::proxy_link_check(f.kgc.params, f.original.public_key, f.publics, f.warrant,
                                       as_view("order #17"), trace, sig));
        CHECK(f.verify(as_view("order #17"), sig));

        SignDebugTrace bad = trace;
        bad.t_slots[0] = bad.t_slots[0] + KeyPoint::generator();
        CHECK_FALSE(oracle::proxy_link_check(f.kgc.params, f.original.public_key, f.publics, f.warrant,
                                             as_view("order #17"), bad, sig));
    }

    TEST_CASE("pairing counts") {
        Rng rng(66);
        for (std::size_t n = 1; n <= 8; ++n) {
            ProxyFixture f(rng, n);
            std::optional<ProxyRingSignature> sig;
            {
                CountingScope scope;
                sig = f.sign(n / 2, as_view("count"), rng);
                CHECK(scope.counts().pairings == 2 * n - 1);
            }
            CountingScope scope;
            CHECK(f.verify(as_view("count"), *sig));
            CHECK(scope.counts().pairings == 2);
        }
    }

    TEST_CASE("round trip for every size and slot") {
        Rng rng(67);
        for (std::size_t n = 1; n <= 8; ++n) {
            ProxyFixture f(rng, n);
            for (std::size_t k = 0; k < n; ++k) {
                const Bytes m = oracle::random_bytes(rng, 12);
                CHECK(f.verify(m, f.sign(k, m, rng)));
            }
        }
    }

    TEST_CASE("folded and target-group exponentiation agree") {
        Rng setup_rng(68);
        ProxyFixture f(setup_rng, 3);
        for (std::size_t k = 0; k < 3; ++k) {
            Rng a(800 + k), b(800 + k);
            const auto folded = f.sign(k, as_view("x"), a, nullptr, ExpStrategy::FoldIntoScalars);
            const auto direct = f.sign(k, as_view("x"), b, nullptr, ExpStrategy::TargetPow);
            CHECK(encode(folded) == encode(direct));
            CHECK(proxy_ring_verify(f.kgc.params, f.original.public_key, f.publics, f.warrant, as_view("x"), folded,
                                    ExpStrategy::TargetPow));
        }
    }

    TEST_CASE("tampering, wrong warrant and wrong original key are rejected") {
        Rng rng(69);
        ProxyFixture f(rng, 4);
        const TargetElem g = pairing(BasePoint::generator(), KeyPoint::generator());
        const auto sig = f.sign(1, as_view("m"), rng);
        REQUIRE(f.verify(as_view("m"), sig));

        CHECK_FALSE(f.verify(as_view("m'"), sig));
        for (std::size_t i = 0; i < 4; ++i) {
            auto bad = sig;
            bad.c[i] = gt_pow(g, random_scalar(rng));
            CHECK_FALSE(f.verify(as_view("m"), bad));
        }
        auto bad_t = sig;
        bad_t.t = bad_t.t + KeyPoint::generator();
        CHECK_FALSE(f.verify(as_view("m"), bad_t));

        for (int i = 0; i < 20; ++i) {
            const Bytes other = oracle::random_bytes(rng, 1 + rng.uniform(40));
            CHECK_FALSE(
                proxy_ring_verify(f.kgc.params, f.original.public_key, f.publics, other, as_view("m"), sig));
        }
        const auto stranger = generate_long_term_key(f.kgc.params, rng);
        CHECK_FALSE(proxy_ring_verify(f.kgc.params, stranger.public_key, f.publics, f.warrant, as_view("m"), sig));

        auto swapped = f.publics;
        std::swap(swapped[0], swapped[3]);
        CHECK_FALSE(proxy_ring_verify(f.kgc.params, f.original.public_key, swapped, f.warrant, as_view("m"), sig));
    }

    TEST_CASE("signer-slot independence") {
        Rng rng(70);
        ProxyFixture f(rng, 4);
        std::set<std::size_t> sizes;
        for (std::size_t k = 0; k < 4; ++k) {
            const auto sig = f.sign(k, as_view("same"), rng);
            CHECK(f.verify(as_view("same"), sig));
            sizes.insert(encode(sig).size());
        }
        CHECK(sizes.size() == 1);
    }

    TEST_CASE("slot lookup and signer checks") {
        Rng rng(71);
        ProxyFixture f(rng, 3);
        CHECK(find_proxy_slot(f.original.public_key, f.publics, f.keys[2]) == 2);
        CHECK_THROWS_AS(
            proxy_ring_sign(f.kgc.params, f.original.public_key, f.publics, 0, f.keys[2], f.warrant, as_view("m"), rng),
            Error);
        CHECK_THROWS_AS(
            proxy_ring_sign(f.kgc.params, f.original.public_key, f.publics, 3, f.keys[2], f.warrant, as_view("m"), rng),
            Error);
        auto sig = f.sign(0, as_view("m"), rng);
        auto fewer = f.publics;
        fewer.pop_back();
        CHECK_THROWS_AS(
            proxy_ring_verify(f.kgc.params, f.original.public_key, fewer, f.warrant, as_view("m"), sig), Error);
    }
}
