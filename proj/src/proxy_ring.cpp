#include "idring/proxy_ring.hpp"

#include "idring/error.hpp"
#include "idring/rng.hpp"

namespace idring {

LongTermKeyPair generate_long_term_key(const SystemParams& params, Rng& rng) {
    return long_term_key_from_secret(params, random_scalar(rng));
}

LongTermKeyPair long_term_key_from_secret(const SystemParams& params, const Scalar& secret) {
    if (secret.is_zero()) throw Error(ErrorCode::ScalarOutOfRange, "long-term secret must be non-zero");
    return {secret, base_mul(secret, params.base_generator)};
}

DelegationToken delegate(const LongTermKeyPair& original, ByteView warrant) {
    if (warrant.empty()) throw Error(ErrorCode::EmptyWarrant, "empty warrant");
    return {Bytes(warrant.begin(), warrant.end()), key_mul(original.secret, warrant_point(warrant))};
}

bool delegation_verify(const SystemParams& params, const BasePoint& original_public, const DelegationToken& token) {
    if (token.warrant.empty()) return false;
    return pairing(params.base_generator, token.x_ow) == pairing(original_public, warrant_point(token.warrant));
}

ProxyKeyPair proxy_key_gen(const SystemParams& params, const DelegationToken& token, const LongTermKeyPair& proxy,
                           const BasePoint& original_public) {
    if (!delegation_verify(params, original_public, token))
        throw Error(ErrorCode::InvalidDelegation, "invalid delegation");
    return {token.x_ow + proxy.secret * warrant_point(token.warrant), original_public + proxy.public_key};
}

namespace {

std::vector<BasePoint> combined_keys(const BasePoint& original_public, std::span<const BasePoint> proxies) {
    std::vector<BasePoint> out;
    out.reserve(proxies.size());
    for (const BasePoint& pk : proxies) out.push_back(original_public + pk);
    return out;
}

RingDescriptor ring_of(const std::vector<BasePoint>& keys) {
    std::vector<Bytes> members;
    members.reserve(keys.size());
    for (const BasePoint& key : keys) {
        const auto enc = key.to_bytes();
        members.emplace_back(enc.begin(), enc.end());
    }
    return RingDescriptor(std::move(members));
}

}  // namespace

RingDescriptor combined_ring(const BasePoint& original_public, std::span<const BasePoint> proxies) {
    return ring_of(combined_keys(original_public, proxies));
}

std::optional<std::size_t> find_proxy_slot(const BasePoint& original_public, std::span<const BasePoint> proxies,
                                           const ProxyKeyPair& key) {
    for (std::size_t i = 0; i < proxies.size(); ++i)
        if (original_public + proxies[i] == key.combined_public) return i;
    return std::nullopt;
}

ProxyRingSignature proxy_ring_sign(const SystemParams& params, const BasePoint& original_public,
                                   std::span<const BasePoint> proxies, std::size_t signer, const ProxyKeyPair& key,
                                   ByteView warrant, ByteView message, Rng& rng, SignDebugTrace* trace,
                                   ExpStrategy strategy) {
    const std::size_t n = proxies.size();
    if (signer >= n) throw Error(ErrorCode::SignerIndexOutOfRange, "signer index out of range");
    const std::vector<BasePoint> keys = combined_keys(original_public, proxies);
    if (keys[signer] != key.combined_public)
        throw Error(ErrorCode::SignerMismatch, "proxy key does not match the combined key at the signer slot");
    RingDescriptor ring = ring_of(keys);

    const Scalar k = h1_scalar(encode_sign_input(message, ring));
    const KeyPoint w = warrant_point(warrant);

    std::vector<TargetElem> c(n);
    std::vector<KeyPoint> t(n);

    const KeyPoint a = random_key_point(rng);
    c[(signer + 1) % n] = pairing(params.base_generator, a);
    for (std::size_t step = 1; step < n; ++step) {
        const std::size_t i = (signer + step) % n;
        t[i] = random_key_point(rng);
        const Scalar h = h3_scalar(c[i]);
        const TargetElem keyed = strategy == ExpStrategy::FoldIntoScalars ? pairing(keys[i], (k * h) * w)
                                                                          : gt_pow(pairing(keys[i], h * w), k);
        c[(i + 1) % n] = keyed * pairing(params.base_generator, t[i]);
    }
    t[signer] = a - (k * h3_scalar(c[signer])) * key.secret_point;

    KeyPoint total = t[0];
    for (std::size_t i = 1; i < n; ++i) total = total + t[i];

    if (trace) *trace = SignDebugTrace{k, a, t};
    return ProxyRingSignature{std::move(ring), std::move(c), total};
}

bool proxy_ring_verify(const SystemParams& params, const BasePoint& original_public,
                       std::span<const BasePoint> proxies, ByteView warrant, ByteView message,
                       const ProxyRingSignature& sig, ExpStrategy strategy) {
    if (sig.c.size() != proxies.size() || sig.ring.size() != sig.c.size())
        throw Error(ErrorCode::LengthMismatch, "proxy set size and number of ring values differ");
    if (warrant.empty()) return false;

    const std::vector<BasePoint> keys = combined_keys(original_public, proxies);
    const RingDescriptor ring = ring_of(keys);
    if (ring != sig.ring) return false;

    const Scalar k = h1_scalar(encode_sign_input(message, ring));
    const KeyPoint w = warrant_point(warrant);

    TargetElem lhs = sig.c[0];
    BasePoint weighted = h3_scalar(sig.c[0]) * keys[0];
    for (std::size_t i = 1; i < keys.size(); ++i) {
        lhs = lhs * sig.c[i];
        weighted = weighted + h3_scalar(sig.c[i]) * keys[i];
    }

    const TargetElem keyed =
        strategy == ExpStrategy::FoldIntoScalars ? pairing(k * weighted, w) : gt_pow(pairing(weighted, w), k);
    return lhs == keyed * pairing(params.base_generator, sig.t);
}

}  // namespace idring
