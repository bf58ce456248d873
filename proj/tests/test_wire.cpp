#include <doctest.h>

#include <set>

#include "artifact_world.hpp"

using namespace idring;

namespace {

ErrorCode decode_error(ByteView bytes) {
    try {
        (void)decode(bytes);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("decode succeeded");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("wire") {
    TEST_CASE("every kind round-trips bit-exactly") {
        oracle::World w(90);
        std::set<ArtifactKind> kinds;
        for (int trial = 0; trial < 200; ++trial) {
            for (const Artifact& a : w.one_of_each()) {
                const Bytes enc = encode(a);
                const Artifact back = decode(enc);
                CHECK(back == a);
                CHECK(encode(back) == enc);
                CHECK(dearmor(as_view(armor(a))) == enc);
                kinds.insert(kind_of(a));
            }
        }
        CHECK(kinds.size() == 9);
    }

    TEST_CASE("r = 3 ring signature re-encodes to identical bytes") {
        Rng rng(91);
        const KgcSetup kgc = setup(rng);
        const auto ring = RingDescriptor::from_strings({"a", "b", "c"});
        const auto sig = ring_sign(kgc.params, ring, 1, extract(kgc.master, as_view("b")), as_view("m"), rng);
        const Bytes enc = encode(sig);
        CHECK(enc.size() == 4 + 1 + 1 + 8 + 3 * (8 + 1) + 3 * kTargetBytes + kKeyPointBytes);
        CHECK(encode(decode(enc)) == enc);
        CHECK(decode_as<RingSignature>(enc) == sig);
    }

    TEST_CASE("envelope header") {
        Rng rng(92);
        const KgcSetup kgc = setup(rng);
        Bytes enc = encode(kgc.params);
        REQUIRE(enc.size() == 6 + 1 + kBasePointBytes + kKeyPointBytes + kBasePointBytes);
        CHECK(enc[0] == 'I');
        CHECK(enc[3] == 'S');
        CHECK(enc[4] == kWireVersion);
        CHECK(enc[5] == static_cast<std::uint8_t>(ArtifactKind::Params));

        Bytes bad = enc;
        bad[0] = 'X';
        CHECK(decode_error(bad) == ErrorCode::BadMagic);
        bad = enc;
        bad[4] = 2;
        CHECK(decode_error(bad) == ErrorCode::UnsupportedVersion);
        bad = enc;
        bad[5] = 0;
        CHECK(decode_error(bad) == ErrorCode::UnknownKind);
        bad[5] = 10;
        CHECK(decode_error(bad) == ErrorCode::UnknownKind);
        bad = enc;
        bad.pop_back();
        CHECK(decode_error(bad) == ErrorCode::Truncated);
        bad = enc;
        bad.push_back(0);
        CHECK(decode_error(bad) == ErrorCode::TrailingData);
        CHECK(decode_error(Bytes{}) == ErrorCode::Truncated);
    }

    TEST_CASE("each validation failure has its own code") {
        Rng rng(93);
        const KgcSetup kgc = setup(rng);
        std::set<ErrorCode> codes;

        Bytes key = encode(extract(kgc.master, as_view("alice")));
        key[key.size() - 1] ^= 0x01;
        codes.insert(decode_error(key));

        Bytes master = encode(kgc.master);
        const auto q = group_order();
        std::copy(q.begin(), q.end(), master.end() - kScalarBytes);
        codes.insert(decode_error(master));

        const auto ring = RingDescriptor::from_strings({"a", "b"});
        const auto sig = ring_sign(kgc.params, ring, 0, extract(kgc.master, as_view("a")), as_view("m"), rng);
        Bytes enc = encode(sig);
        const std::size_t c0 = 6 + 8 + 2 * 9;
        enc[c0 + 100] ^= 0x01;
        codes.insert(decode_error(enc));

        CHECK(codes == std::set<ErrorCode>{ErrorCode::InvalidPoint, ErrorCode::ScalarOutOfRange,
                                           ErrorCode::InvalidTargetElement});
        CHECK(to_string(ErrorCode::InvalidPoint) != to_string(ErrorCode::Truncated));
    }

    TEST_CASE("malformed rings and keys") {
        Rng rng(94);
        const KgcSetup kgc = setup(rng);
        const auto ring = RingDescriptor::from_strings({"a", "a2"});
        const auto sig = ring_sign(kgc.params, ring, 0, extract(kgc.master, as_view("a")), as_view("m"), rng);
        Bytes enc = encode(sig);
        // shorten "a2" to "a" so the ring repeats a member
        Bytes dup = enc;
        dup[6 + 8 + 8 + 1 + 7] = 1;       // second length 2 -> 1
        dup.erase(dup.begin() + 6 + 8 + 9 + 8 + 1);  // drop the '2'
        CHECK(decode_error(dup) == ErrorCode::MalformedRing);

        Bytes zero = enc;
        for (int i = 0; i < 8; ++i) zero[6 + i] = 0;
        CHECK(decode_error(zero) == ErrorCode::MalformedRing);

        Bytes huge = enc;
        huge[6] = 0x7f;
        CHECK(decode_error(huge) == ErrorCode::Truncated);

        const LongTermKeyPair a = generate_long_term_key(kgc.params, rng);
        const LongTermKeyPair b = generate_long_term_key(kgc.params, rng);
        LongTermKeyPair mixed{a.secret, b.public_key};
        CHECK(decode_error(encode(mixed)) == ErrorCode::InconsistentKey);

        CHECK(decode_error(encode(PublicKey{BasePoint::identity()})) == ErrorCode::InvalidPoint);
        SystemParams bad_params = kgc.params;
        bad_params.base_generator = Scalar::from_u64(2) * bad_params.base_generator;
        CHECK(decode_error(encode(bad_params)) == ErrorCode::InvalidParams);
    }

    TEST_CASE("documented master-key vector") {
        const std::string hex = "4944525301070000000000000000000000000000000000000000000000000000000000000001";
        CHECK(armor(MasterKey::restore(Scalar::one())) == hex);
        CHECK(decode_as<MasterKey>(from_hex(hex)).secret() == Scalar::one());
    }

    TEST_CASE("decode_as checks the kind") {
        Rng rng(95);
        const KgcSetup kgc = setup(rng);
        const Bytes enc = encode(kgc.params);
        CHECK(decode_as<SystemParams>(enc) == kgc.params);
        try {
            (void)decode_as<RingSignature>(enc);
            FAIL("wrong kind accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::WrongKind);
        }
    }

    TEST_CASE("armor") {
        Rng rng(96);
        const KgcSetup kgc = setup(rng);
        const std::string hex = armor(kgc.params);
        CHECK(hex.rfind("49445253", 0) == 0);
        for (char ch : hex) CHECK(((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f')));
        CHECK(dearmor(as_view(hex + "\n")) == encode(kgc.params));
        CHECK(dearmor(encode(kgc.params)) == encode(kgc.params));
        CHECK_THROWS_AS(dearmor(as_view("zz")), Error);
    }

    TEST_CASE("single-byte corruption never crashes") {
        oracle::World w(97);
        for (const Artifact& a : w.one_of_each()) {
            const Bytes enc = encode(a);
            for (std::size_t i = 0; i < enc.size(); i += 1 + enc.size() / 97) {
                Bytes bad = enc;
                bad[i] ^= static_cast<std::uint8_t>(1 + w.rng.uniform(255));
                try {
                    const Artifact back = decode(bad);
                    // identity bytes and message-free fields may legitimately change
                    CHECK(encode(back) == bad);
                } catch (const Error&) {
                }
            }
        }
    }

    TEST_CASE("random fuzz input") {
        Rng rng(98);
        oracle::World w(99);
        const auto seeds = w.one_of_each();
        int rejected = 0;
        for (int i = 0; i < 2000; ++i) {
            Bytes data;
            if (i % 2 == 0) {
                data = oracle::random_bytes(rng, rng.uniform(700));
                if (i % 4 == 0 && data.size() >= 6) {
                    std::copy(kWireMagic.begin(), kWireMagic.end(), data.begin());
                    data[4] = kWireVersion;
                    data[5] = static_cast<std::uint8_t>(1 + rng.uniform(9));
                }
            } else {
                data = encode(seeds[rng.uniform(seeds.size())]);
                const std::size_t flips = 1 + rng.uniform(4);
                for (std::size_t f = 0; f < flips; ++f) data[rng.uniform(data.size())] = rng.next_u64() & 0xff;
                if (rng.uniform(3) == 0) data.resize(rng.uniform(data.size() + 1));
            }
            try {
                (void)decode(data);
            } catch (const Error&) {
                ++rejected;
            }
        }
        CHECK(rejected > 1500);
    }
}
