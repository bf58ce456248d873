#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace idring;

TEST_SUITE("kgc") {
    TEST_CASE("setup publishes P_pub = sP") {
        Rng rng(30);
        const KgcSetup kgc = setup(rng);
        CHECK(base_mul(kgc.master.secret(), kgc.params.base_generator) == kgc.params.master_public);
        CHECK(kgc.params.base_generator == BasePoint::generator());
        CHECK(kgc.params.key_generator == KeyPoint::generator());
        CHECK_FALSE(kgc.master.secret().is_zero());

        Rng other(31);
        CHECK_FALSE(setup(other).params.master_public == kgc.params.master_public);
    }

    TEST_CASE("forced master scalar of one") {
        const KgcSetup kgc = testing::setup_with_secret(Scalar::one());
        CHECK(kgc.params.master_public == kgc.params.base_generator);
        const IdentitySecretKey sk = extract(kgc.master, as_view("alice"));
        CHECK(sk.point == h2_point(as_view("alice")));
        CHECK_THROWS_AS(testing::setup_with_secret(Scalar::zero()), Error);
    }

    TEST_CASE("extraction validity via the pairing check") {
        Rng rng(32);
        const KgcSetup kgc = setup(rng);
        for (int i = 0; i < 20; ++i) {
            const Bytes id = oracle::random_bytes(rng, 1 + rng.uniform(24));
            const IdentitySecretKey sk = extract(kgc.master, id);
            CHECK(sk.id == id);
            CHECK(pairing(kgc.params.master_public, public_key_of(id)) == pairing(kgc.params.base_generator, sk.point));
            CHECK(validate_identity_key(kgc.params, sk));
        }
        const IdentitySecretKey a = extract(kgc.master, as_view("carol"));
        CHECK(a == extract(kgc.master, as_view("carol")));

        IdentitySecretKey forged = a;
        forged.id = to_bytes("mallory");
        CHECK_FALSE(validate_identity_key(kgc.params, forged));

        Rng rng2(33);
        const KgcSetup other = setup(rng2);
        CHECK_FALSE(validate_identity_key(other.params, a));
    }

    TEST_CASE("empty identities are refused") {
        Rng rng(34);
        const KgcSetup kgc = setup(rng);
        try {
            (void)extract(kgc.master, Bytes{});
            FAIL("empty identity accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EmptyIdentity);
            CHECK(std::string(e.what()) == "empty identity");
        }
        CHECK_THROWS_AS(public_key_of(Bytes{}), Error);
    }

    TEST_CASE("public keys") {
        CHECK(public_key_of(as_view("alice")) == h2_point(as_view("alice")));
        Rng rng(35);
        std::set<std::array<std::uint8_t, kKeyPointBytes>> seen;
        for (int i = 0; i < 64; ++i) {
            const KeyPoint q = public_key_of(oracle::random_bytes(rng, 12));
            CHECK(q.in_subgroup());
            seen.insert(q.to_bytes());
        }
        CHECK(seen.size() == 64);
    }

    TEST_CASE("params encoding never contains the master scalar") {
        Rng rng(36);
        for (int i = 0; i < 10; ++i) {
            const KgcSetup kgc = setup(rng);
            const Bytes params = encode(kgc.params);
            const auto s = kgc.master.secret().to_bytes();
            CHECK(std::search(params.begin(), params.end(), s.begin(), s.end()) == params.end());
            std::array<std::uint8_t, kScalarBytes> le{};
            std::reverse_copy(s.begin(), s.end(), le.begin());
            CHECK(std::search(params.begin(), params.end(), le.begin(), le.end()) == params.end());
        }
    }
}
