#include <doctest.h>

#include <array>
#include <set>
#include <thread>

#include "oracles.hpp"

using namespace idring;

namespace {

struct Fixture {
    KgcSetup kgc;
    RingDescriptor ring;
    std::vector<IdentitySecretKey> keys;

    Fixture(Rng& rng, std::size_t r)
        : kgc(setup(rng)), ring(RingDescriptor::from_strings(oracle::member_names(r))) {
        for (const Bytes& id : ring.members()) keys.push_back(extract(kgc.master, id));
    }

    RingSignature sign(std::size_t k, ByteView m, Rng& rng, SignDebugTrace* trace = nullptr,
                       ExpStrategy s = ExpStrategy::FoldIntoScalars) const {
        return ring_sign(kgc.params, ring, k, keys[k], m, rng, trace, s);
    }
};

}  // namespace

TEST_SUITE("ring_sig") {
    TEST_CASE("single-member ring closes immediately") {
        Rng rng(40);
        Fixture f(rng, 1);
        SignDebugTrace trace;
        const auto sig = f.sign(0, as_view("hello"), rng, &trace);
        REQUIRE(sig.c.size() == 1);
        CHECK(sig.c[0] == gt_pow(pairing(f.kgc.params.base_generator, trace.a), trace.k));
        CHECK(sig.t == trace.a - h3_scalar(sig.c[0]) * f.keys[0].point);
        CHECK(ring_verify(f.kgc.params, f.ring, as_view("hello"), sig));
    }

    TEST_CASE("every cyclic link holds for r = 3, signer 1") {
        Rng rng(41);
        Fixture f(rng, 3);
        SignDebugTrace trace;
        const auto sig = f.sign(1, as_view("msg"), rng, &trace);
        CHECK(oracle::link_check(f.kgc.params, f.ring, as_view("msg"), trace, sig));
        CHECK(ring_verify(f.kgc.params, f.ring, as_view("msg"), sig));
    }

    TEST_CASE("perturbed trace fails the link check") {
        Rng rng(42);
        Fixture f(rng, 4);
        SignDebugTrace trace;
        const auto sig = f.sign(2, as_view("msg"), rng, &trace);
        for (std::size_t i = 0; i < 4; ++i) {
            SignDebugTrace bad = trace;
            bad.t_slots[i] = bad.t_slots[i] + KeyPoint::generator();
            CHECK_FALSE(oracle::link_check(f.kgc.params, f.ring, as_view("msg"), bad, sig));
        }
    }

    TEST_CASE("pairing counts: 2r-1 to sign, 2 to verify") {
        Rng rng(43);
        for (std::size_t r = 1; r <= 8; ++r) {
            Fixture f(rng, r);
            OpCounts sign_counts, verify_counts;
            RingSignature sig = [&] {
                CountingScope scope;
                auto s = f.sign(r - 1, as_view("count"), rng);
                sign_counts = scope.counts();
                return s;
            }();
            {
                CountingScope scope;
                CHECK(ring_verify(f.kgc.params, f.ring, as_view("count"), sig));
                verify_counts = scope.counts();
            }
            CHECK(sign_counts.pairings == 2 * r - 1);
            CHECK(verify_counts.pairings == 2);
        }
    }

    TEST_CASE("round trip for every ring size and slot") {
        Rng rng(44);
        for (std::size_t r = 1; r <= 8; ++r) {
            Fixture f(rng, r);
            for (std::size_t k = 0; k < r; ++k) {
                const Bytes m = oracle::random_bytes(rng, 16);
                const auto sig = f.sign(k, m, rng);
                CHECK(ring_verify(f.kgc.params, f.ring, m, sig));
                CHECK(ring_verify(f.kgc.params, m, sig));
            }
        }
    }

    TEST_CASE("per-link closure implies aggregate acceptance") {
        Rng rng(45);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t r = 1 + rng.uniform(6);
            Fixture f(rng, r);
            SignDebugTrace trace;
            const Bytes m = oracle::random_bytes(rng, 24);
            const auto sig = f.sign(rng.uniform(r), m, rng, &trace);
            const bool links = oracle::link_check(f.kgc.params, f.ring, m, trace, sig);
            CHECK(links);
            if (links) CHECK(ring_verify(f.kgc.params, f.ring, m, sig));
        }
    }

    TEST_CASE("tampering is rejected") {
        Rng rng(46);
        Fixture f(rng, 4);
        const TargetElem g = pairing(BasePoint::generator(), KeyPoint::generator());
        for (int trial = 0; trial < 5; ++trial) {
            const auto sig = f.sign(rng.uniform(4), as_view("original"), rng);
            REQUIRE(ring_verify(f.kgc.params, f.ring, as_view("original"), sig));

            CHECK_FALSE(ring_verify(f.kgc.params, f.ring, as_view("0riginal"), sig));

            for (std::size_t i = 0; i < 4; ++i) {
                RingSignature bad = sig;
                bad.c[i] = gt_pow(g, random_scalar(rng));
                CHECK_FALSE(ring_verify(f.kgc.params, f.ring, as_view("original"), bad));
            }

            RingSignature bad_t = sig;
            bad_t.t = bad_t.t + random_key_point(rng);
            CHECK_FALSE(ring_verify(f.kgc.params, f.ring, as_view("original"), bad_t));

            auto members = f.ring.members();
            members[rng.uniform(4)] = to_bytes("intruder");
            RingSignature bad_ring = sig;
            bad_ring.ring = RingDescriptor(members);
            CHECK_FALSE(ring_verify(f.kgc.params, as_view("original"), bad_ring));
            // a signature over one ring never verifies against another
            CHECK_FALSE(ring_verify(f.kgc.params, bad_ring.ring, as_view("original"), sig));

            Rng other_rng(1000 + trial);
            const KgcSetup other = setup(other_rng);
            CHECK_FALSE(ring_verify(other.params, f.ring, as_view("original"), sig));
        }
    }

    TEST_CASE("folded and target-group exponentiation agree byte for byte") {
        for (std::size_t r = 1; r <= 4; ++r) {
            Rng setup_rng(47 + r);
            Fixture f(setup_rng, r);
            for (std::size_t k = 0; k < r; ++k) {
                Rng a(500 + 10 * r + k), b(500 + 10 * r + k);
                const auto folded = f.sign(k, as_view("fold"), a, nullptr, ExpStrategy::FoldIntoScalars);
                const auto direct = f.sign(k, as_view("fold"), b, nullptr, ExpStrategy::TargetPow);
                CHECK(encode(folded) == encode(direct));
                CHECK(ring_verify(f.kgc.params, f.ring, as_view("fold"), folded, ExpStrategy::TargetPow));
            }
        }
    }

    TEST_CASE("all members produce verifying, equal-length signatures") {
        Rng rng(48);
        Fixture f(rng, 5);
        std::set<std::size_t> sizes;
        for (std::size_t k = 0; k < 5; ++k) {
            const auto sig = f.sign(k, as_view("same message"), rng);
            CHECK(ring_verify(f.kgc.params, f.ring, as_view("same message"), sig));
            sizes.insert(encode(sig).size());
        }
        CHECK(sizes.size() == 1);
    }

    TEST_CASE("signing preconditions") {
        Rng rng(49);
        Fixture f(rng, 3);
        try {
            (void)ring_sign(f.kgc.params, f.ring, 3, f.keys[0], as_view("m"), rng);
            FAIL("out-of-range index accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SignerIndexOutOfRange);
        }
        try {
            (void)ring_sign(f.kgc.params, f.ring, 1, f.keys[0], as_view("m"), rng);
            FAIL("mismatched key accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SignerMismatch);
        }
    }

    TEST_CASE("structural mismatch is an error, not a rejection") {
        Rng rng(50);
        Fixture f(rng, 3);
        auto sig = f.sign(0, as_view("m"), rng);
        sig.c.pop_back();
        try {
            (void)ring_verify(f.kgc.params, f.ring, as_view("m"), sig);
            FAIL("length mismatch accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::LengthMismatch);
        }
    }

    TEST_CASE("a key from a foreign KGC cannot produce a verifying signature") {
        Rng rng(51);
        Fixture f(rng, 3);
        Rng rogue_rng(52);
        const KgcSetup rogue = setup(rogue_rng);
        const IdentitySecretKey stolen = extract(rogue.master, f.ring[1]);
        const auto sig = ring_sign(f.kgc.params, f.ring, 1, stolen, as_view("m"), rng);
        CHECK_FALSE(ring_verify(f.kgc.params, f.ring, as_view("m"), sig));
    }

    TEST_CASE("concurrent signing with separate generators") {
        Rng rng(53);
        const Fixture f(rng, 3);
        std::vector<std::thread> threads;
        std::array<bool, 4> ok{};
        for (std::size_t i = 0; i < ok.size(); ++i)
            threads.emplace_back([&, i] {
                Rng local(700 + i);
                const auto sig = f.sign(i % 3, as_view("threaded"), local);
                ok[i] = ring_verify(f.kgc.params, f.ring, as_view("threaded"), sig);
            });
        for (auto& t : threads) t.join();
        for (bool b : ok) CHECK(b);
    }
}
