#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace idring;

TEST_SUITE("groups") {
    TEST_CASE("zero scalar annihilates the pairing") {
        const BasePoint zero_base = Scalar::zero() * BasePoint::generator();
        CHECK(zero_base.is_identity());
        CHECK(pairing(zero_base, KeyPoint::generator()).is_one());
        CHECK(pairing(BasePoint::generator(), KeyPoint::identity()).is_one());
    }

    TEST_CASE("bilinearity with small scalars") {
        const auto P = BasePoint::generator();
        const auto Q = KeyPoint::generator();
        const TargetElem lhs = pairing(Scalar::from_u64(2) * P, Scalar::from_u64(3) * Q);
        CHECK(lhs == gt_pow(pairing(P, Q), Scalar::from_u64(6)));
        // and not the neighbouring exponents
        CHECK_FALSE(lhs == gt_pow(pairing(P, Q), Scalar::from_u64(5)));
    }

    TEST_CASE("bilinearity against big-integer exponent arithmetic") {
        Rng rng(101);
        const auto P = BasePoint::generator();
        const auto Q = KeyPoint::generator();
        const TargetElem g = pairing(P, Q);
        for (int trial = 0; trial < 100; ++trial) {
            const Scalar a = random_scalar(rng), b = random_scalar(rng);
            const Scalar ab = oracle::mul_mod(a, b);
            CHECK(pairing(a * P, b * Q) == gt_pow(g, ab));
        }
    }

    TEST_CASE("non-degeneracy") {
        CHECK_FALSE(pairing(BasePoint::generator(), KeyPoint::generator()).is_one());
    }

    TEST_CASE("key group laws") {
        Rng rng(7);
        const KeyPoint p = random_key_point(rng);
        CHECK((p - p).is_identity());
        CHECK(Scalar::from_u64(2) * p + Scalar::from_u64(3) * p == Scalar::from_u64(5) * p);
        for (int trial = 0; trial < 20; ++trial) {
            const KeyPoint a = random_key_point(rng), b = random_key_point(rng), c = random_key_point(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a + KeyPoint::identity() == a);
            CHECK((a - b) + b == a);
            CHECK(a + a == Scalar::from_u64(2) * a);
        }
    }

    TEST_CASE("base group laws") {
        Rng rng(8);
        const auto G = BasePoint::generator();
        for (int trial = 0; trial < 20; ++trial) {
            const BasePoint a = random_scalar(rng) * G, b = random_scalar(rng) * G, c = random_scalar(rng) * G;
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK(a + BasePoint::identity() == a);
        }
    }

    TEST_CASE("target group laws and exponent arithmetic") {
        Rng rng(9);
        const TargetElem g = pairing(BasePoint::generator(), KeyPoint::generator());
        for (int trial = 0; trial < 20; ++trial) {
            const TargetElem x = gt_pow(g, random_scalar(rng));
            const TargetElem y = gt_pow(g, random_scalar(rng));
            const TargetElem z = gt_pow(g, random_scalar(rng));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * y == y * x);
            const Scalar k = random_scalar(rng);
            const Scalar two_k = oracle::mul_mod(Scalar::from_u64(2), k);
            CHECK(gt_pow(x * x, k) == gt_pow(x, two_k));
        }
        CHECK(gt_pow(g, Scalar::zero()).is_one());
        CHECK(gt_pow(g, Scalar::one()) == g);
        // q - 1 is the inverse exponent
        const Scalar minus_one = -Scalar::one();
        CHECK((gt_pow(g, minus_one) * g).is_one());
    }

    TEST_CASE("scalar arithmetic matches big-integer oracle") {
        Rng rng(10);
        for (int trial = 0; trial < 200; ++trial) {
            const Scalar a = random_scalar(rng), b = random_scalar(rng);
            CHECK(a * b == oracle::mul_mod(a, b));
            CHECK(a + b == oracle::from_int(oracle::to_int(a) + oracle::to_int(b)));
            CHECK(a - b == oracle::from_int(oracle::to_int(a) - oracle::to_int(b)));
            CHECK(a * a.inverse() == Scalar::one());
        }
    }

    TEST_CASE("scalar reduction of wide inputs") {
        Rng rng(11);
        for (std::size_t len : {1u, 16u, 31u, 32u, 33u, 48u, 64u, 100u}) {
            const Bytes wide = oracle::random_bytes(rng, len);
            CHECK(Scalar::reduce(wide) == oracle::from_int(oracle::to_int(ByteView(wide))));
        }
        const auto q = group_order();
        CHECK(Scalar::reduce(q).is_zero());
    }

    TEST_CASE("scalar decoding rejects q and above") {
        auto q = group_order();
        CHECK_THROWS_AS(Scalar::from_bytes(q), Error);
        q[31] -= 1;
        CHECK(Scalar::from_bytes(q) == -Scalar::one());
        CHECK_THROWS_AS(Scalar::from_bytes(Bytes(31, 0)), Error);
    }

    TEST_CASE("random scalars") {
        Rng rng(12);
        std::set<std::array<std::uint8_t, kScalarBytes>> seen;
        for (int i = 0; i < 1000; ++i) {
            const Scalar s = random_scalar(rng);
            CHECK_FALSE(s.is_zero());
            seen.insert(s.to_bytes());
        }
        CHECK(seen.size() == 1000);

        Rng a(99), b(99);
        for (int i = 0; i < 16; ++i) CHECK(random_scalar(a) == random_scalar(b));

        std::set<std::array<std::uint8_t, kScalarBytes>> by_seed;
        for (std::uint64_t seed = 0; seed < 64; ++seed) {
            Rng r(seed);
            by_seed.insert(random_scalar(r).to_bytes());
        }
        CHECK(by_seed.size() == 64);
    }

    TEST_CASE("random key points are valid and distinct") {
        Rng rng(13);
        std::set<std::array<std::uint8_t, kKeyPointBytes>> seen;
        for (int i = 0; i < 64; ++i) {
            const KeyPoint p = random_key_point(rng);
            CHECK(p.in_subgroup());
            CHECK_FALSE(p.is_identity());
            seen.insert(p.to_bytes());
        }
        CHECK(seen.size() == 64);
    }

    TEST_CASE("point and target encodings round-trip") {
        Rng rng(14);
        for (int i = 0; i < 20; ++i) {
            const KeyPoint k = random_key_point(rng);
            CHECK(KeyPoint::from_bytes(k.to_bytes()) == k);
            const BasePoint b = random_scalar(rng) * BasePoint::generator();
            CHECK(BasePoint::from_bytes(b.to_bytes()) == b);
            const TargetElem t = pairing(b, k);
            CHECK(TargetElem::from_bytes(t.to_bytes()) == t);
        }
        CHECK(KeyPoint::from_bytes(KeyPoint::identity().to_bytes()).is_identity());
        CHECK(TargetElem::from_bytes(TargetElem::one().to_bytes()).is_one());
    }

    TEST_CASE("invalid encodings are rejected") {
        Rng rng(15);
        auto key = random_key_point(rng).to_bytes();
        key[47] ^= 0x01;  // almost surely off-curve
        int rejected = 0;
        try {
            (void)KeyPoint::from_bytes(key);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidPoint);
            ++rejected;
        }
        CHECK(rejected == 1);

        auto target = pairing(BasePoint::generator(), KeyPoint::generator()).to_bytes();
        target[100] ^= 0x01;
        CHECK_THROWS_AS(TargetElem::from_bytes(target), Error);

        std::array<std::uint8_t, kTargetBytes> all_ff{};
        all_ff.fill(0xff);
        CHECK_THROWS_AS(TargetElem::from_bytes(all_ff), Error);
        CHECK_THROWS_AS(TargetElem::from_bytes(Bytes(kTargetBytes, 0)), Error);
    }
}
