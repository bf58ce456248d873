#include "idring/ring_sig.hpp"

#include "idring/error.hpp"
#include "idring/rng.hpp"

namespace idring {

namespace {

struct RingContext {
    const SystemParams& params;
    Scalar k;
    ExpStrategy strategy;

    // [e(P_pub, h Q) * e(P, T)]^K
    TargetElem link(const TargetElem& c_in, const KeyPoint& q, const KeyPoint& t) const {
        const Scalar h = h3_scalar(c_in);
        if (strategy == ExpStrategy::FoldIntoScalars)
            return pairing(params.master_public, (k * h) * q) * pairing(params.base_generator, k * t);
        return gt_pow(pairing(params.master_public, h * q) * pairing(params.base_generator, t), k);
    }

    // e(P, A)^K
    TargetElem glue(const KeyPoint& a) const {
        if (strategy == ExpStrategy::FoldIntoScalars) return pairing(params.base_generator, k * a);
        return gt_pow(pairing(params.base_generator, a), k);
    }
};

}  // namespace

RingSignature ring_sign(const SystemParams& params, const RingDescriptor& ring, std::size_t signer,
                        const IdentitySecretKey& key, ByteView message, Rng& rng, SignDebugTrace* trace,
                        ExpStrategy strategy) {
    const std::size_t r = ring.size();
    if (signer >= r) throw Error(ErrorCode::SignerIndexOutOfRange, "signer index out of range");
    if (ring[signer] != key.id) throw Error(ErrorCode::SignerMismatch, "ring member does not match signing key");

    const RingContext ctx{params, h1_scalar(encode_sign_input(message, ring)), strategy};

    std::vector<TargetElem> c(r);
    std::vector<KeyPoint> t(r);

    const KeyPoint a = random_key_point(rng);
    c[(signer + 1) % r] = ctx.glue(a);
    for (std::size_t step = 1; step < r; ++step) {
        const std::size_t i = (signer + step) % r;
        t[i] = random_key_point(rng);
        c[(i + 1) % r] = ctx.link(c[i], public_key_of(ring[i]), t[i]);
    }
    t[signer] = a - h3_scalar(c[signer]) * key.point;

    KeyPoint total = t[0];
    for (std::size_t i = 1; i < r; ++i) total = total + t[i];

    if (trace) *trace = SignDebugTrace{ctx.k, a, t};
    return RingSignature{ring, std::move(c), total};
}

bool ring_verify(const SystemParams& params, const RingDescriptor& ring, ByteView message, const RingSignature& sig,
                 ExpStrategy strategy) {
    if (sig.c.size() != ring.size() || sig.ring.size() != sig.c.size())
        throw Error(ErrorCode::LengthMismatch, "ring size and number of ring values differ");
    if (sig.ring != ring) return false;

    const Scalar k = h1_scalar(encode_sign_input(message, ring));

    TargetElem lhs = sig.c[0];
    KeyPoint weighted = h3_scalar(sig.c[0]) * public_key_of(ring[0]);
    for (std::size_t i = 1; i < ring.size(); ++i) {
        lhs = lhs * sig.c[i];
        weighted = weighted + h3_scalar(sig.c[i]) * public_key_of(ring[i]);
    }

    TargetElem rhs;
    if (strategy == ExpStrategy::FoldIntoScalars)
        rhs = pairing(params.master_public, k * weighted) * pairing(params.base_generator, k * sig.t);
    else
        rhs = gt_pow(pairing(params.master_public, weighted) * pairing(params.base_generator, sig.t), k);
    return lhs == rhs;
}

}  // namespace idring
