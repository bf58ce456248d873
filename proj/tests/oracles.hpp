#pragma once

// Independent reference computations for the test suites. Nothing here
// calls the signing or verification code it is used to check.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>

#include "idring/idring.hpp"

namespace idring::oracle {

using boost::multiprecision::cpp_int;

inline cpp_int to_int(ByteView be) {
    cpp_int v = 0;
    for (std::uint8_t b : be) v = (v << 8) | b;
    return v;
}

inline cpp_int order() {
    const auto q = group_order();
    return to_int(q);
}

inline cpp_int to_int(const Scalar& s) {
    const auto b = s.to_bytes();
    return to_int(ByteView(b));
}

inline Scalar from_int(cpp_int v) {
    v %= order();
    if (v < 0) v += order();
    std::array<std::uint8_t, kScalarBytes> be{};
    for (int i = kScalarBytes - 1; i >= 0; --i) {
        be[i] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return Scalar::from_bytes(be);
}

/// a * b mod q using arbitrary-precision integers.
inline Scalar mul_mod(const Scalar& a, const Scalar& b) { return from_int(to_int(a) * to_int(b)); }

/// Parses the H1 input layout back into (message, ring).
inline std::optional<std::pair<Bytes, std::vector<Bytes>>> decode_sign_input(ByteView data) {
    std::size_t pos = 0;
    auto take = [&](std::size_t n) -> std::optional<ByteView> {
        if (n > data.size() - pos) return std::nullopt;
        ByteView v = data.subspan(pos, n);
        pos += n;
        return v;
    };
    auto u64 = [&]() -> std::optional<std::uint64_t> {
        auto b = take(8);
        if (!b) return std::nullopt;
        std::uint64_t v = 0;
        for (auto x : *b) v = v << 8 | x;
        return v;
    };
    auto tag = take(kTagH1.size());
    if (!tag || !std::equal(tag->begin(), tag->end(), kTagH1.begin())) return std::nullopt;
    auto mlen = u64();
    if (!mlen) return std::nullopt;
    auto m = take(*mlen);
    if (!m) return std::nullopt;
    auto count = u64();
    if (!count) return std::nullopt;
    std::vector<Bytes> ring;
    for (std::uint64_t i = 0; i < *count; ++i) {
        auto len = u64();
        if (!len) return std::nullopt;
        auto id = take(*len);
        if (!id) return std::nullopt;
        ring.emplace_back(id->begin(), id->end());
    }
    if (pos != data.size()) return std::nullopt;
    return std::make_pair(Bytes(m->begin(), m->end()), std::move(ring));
}

/// Every cyclic link of an identity-based ring signature, recomputed in the
/// direct form [e(P_pub, H3(c_i) Q_i) e(P, T_i)]^K, plus sum T_i == T.
inline bool link_check(const SystemParams& params, const RingDescriptor& ring, ByteView message,
                       const SignDebugTrace& trace, const RingSignature& sig) {
    const std::size_t r = ring.size();
    if (sig.c.size() != r || trace.t_slots.size() != r) return false;
    const Scalar k = h1_scalar(encode_sign_input(message, ring));
    if (!(k == trace.k)) return false;
    KeyPoint sum;
    for (std::size_t i = 0; i < r; ++i) {
        const TargetElem inner = pairing(params.master_public, h3_scalar(sig.c[i]) * h2_point(ring[i])) *
                                 pairing(params.base_generator, trace.t_slots[i]);
        if (!(gt_pow(inner, k) == sig.c[(i + 1) % r])) return false;
        sum = sum + trace.t_slots[i];
    }
    return sum == sig.t;
}

/// Proxy variant: c_{i+1} = e(C_i, H3(c_i) W)^K e(P, T_i) with
/// C_i = PK_o + PK_i and W the warrant point.
inline bool proxy_link_check(const SystemParams& params, const BasePoint& original_public,
                             const std::vector<BasePoint>& proxies, ByteView warrant, ByteView message,
                             const SignDebugTrace& trace, const ProxyRingSignature& sig) {
    const std::size_t n = proxies.size();
    if (sig.c.size() != n || trace.t_slots.size() != n) return false;
    std::vector<Bytes> members;
    std::vector<BasePoint> combined;
    for (const auto& pk : proxies) {
        combined.push_back(original_public + pk);
        const auto enc = combined.back().to_bytes();
        members.emplace_back(enc.begin(), enc.end());
    }
    const Scalar k = h1_scalar(encode_sign_input(message, RingDescriptor(members)));
    if (!(k == trace.k)) return false;
    const KeyPoint w = warrant_point(warrant);
    KeyPoint sum;
    for (std::size_t i = 0; i < n; ++i) {
        const TargetElem expected = gt_pow(pairing(combined[i], h3_scalar(sig.c[i]) * w), k) *
                                    pairing(params.base_generator, trace.t_slots[i]);
        if (!(expected == sig.c[(i + 1) % n])) return false;
        sum = sum + trace.t_slots[i];
    }
    return sum == sig.t;
}

inline std::vector<std::string> member_names(std::size_t r, std::string_view prefix = "member") {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < r; ++i) ids.push_back(std::string(prefix) + "-" + std::to_string(i));
    return ids;
}

inline Bytes random_bytes(Rng& rng, std::size_t n) {
    Bytes b(n);
    rng.fill(b);
    return b;
}

}  // namespace idring::oracle
