#pragma once

// Delegation by warrant and proxy ring signatures.
//
// An original signer with key pair (x_o, PK_o = x_o P) delegates by sending
// (w, x_ow = x_o W) with W = H2(w). Each proxy with (x_p, PK_p) checks the
// token with one pairing equation and derives the proxy key
// S = x_ow + x_p W, valid under the combined key C = PK_o + PK_p.
//
// A proxy at slot k of the proxy set signs anonymously. Ring values follow
//
//   c[k+1] = e(P, A)
//   c[i+1] = e(C_i, H3(c[i]) W)^K * e(P, T_i)
//   T_k    = A - K H3(c[k]) S
//
// with K = H1(m || L'), L' being the compressed combined keys, and the
// product of all links gives the two-pairing check
//
//   prod c[i] == e(sum H3(c[i]) C_i, W)^K * e(P, T).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "idring/bytes.hpp"
#include "idring/groups.hpp"
#include "idring/hashing.hpp"
#include "idring/kgc.hpp"
#include "idring/ring_sig.hpp"

namespace idring {

class Rng;

struct LongTermKeyPair {
    Scalar secret;
    BasePoint public_key;  // secret * P

    friend bool operator==(const LongTermKeyPair&, const LongTermKeyPair&) = default;
};

struct DelegationToken {
    Bytes warrant;
    KeyPoint x_ow;

    friend bool operator==(const DelegationToken&, const DelegationToken&) = default;
};

struct ProxyKeyPair {
    KeyPoint secret_point;     // (x_o + x_p) W
    BasePoint combined_public;  // PK_o + PK_p

    friend bool operator==(const ProxyKeyPair&, const ProxyKeyPair&) = default;
};

struct ProxyRingSignature {
    RingDescriptor ring;  // compressed combined keys, in proxy-set order
    std::vector<TargetElem> c;
    KeyPoint t;

    friend bool operator==(const ProxyRingSignature&, const ProxyRingSignature&) = default;
};

LongTermKeyPair generate_long_term_key(const SystemParams& params, Rng& rng);

/// Throws ScalarOutOfRange for a zero secret.
LongTermKeyPair long_term_key_from_secret(const SystemParams& params, const Scalar& secret);

/// Throws EmptyWarrant.
DelegationToken delegate(const LongTermKeyPair& original, ByteView warrant);

bool delegation_verify(const SystemParams& params, const BasePoint& original_public, const DelegationToken& token);

/// Throws InvalidDelegation if the token does not verify against
/// original_public.
ProxyKeyPair proxy_key_gen(const SystemParams& params, const DelegationToken& token, const LongTermKeyPair& proxy,
                           const BasePoint& original_public);

/// The ring descriptor L' hashed into K: compressed PK_o + PK_i per proxy.
RingDescriptor combined_ring(const BasePoint& original_public, std::span<const BasePoint> proxies);

/// Slot of the proxy holding `key`, if it is in the set.
std::optional<std::size_t> find_proxy_slot(const BasePoint& original_public, std::span<const BasePoint> proxies,
                                           const ProxyKeyPair& key);

/// Throws SignerIndexOutOfRange, or SignerMismatch when the combined key at
/// `signer` is not key.combined_public.
ProxyRingSignature proxy_ring_sign(const SystemParams& params, const BasePoint& original_public,
                                   std::span<const BasePoint> proxies, std::size_t signer, const ProxyKeyPair& key,
                                   ByteView warrant, ByteView message, Rng& rng, SignDebugTrace* trace = nullptr,
                                   ExpStrategy strategy = ExpStrategy::FoldIntoScalars);

/// Throws LengthMismatch when the proxy set, embedded ring and ring values
/// disagree in size.
bool proxy_ring_verify(const SystemParams& params, const BasePoint& original_public,
                       std::span<const BasePoint> proxies, ByteView warrant, ByteView message,
                       const ProxyRingSignature& sig, ExpStrategy strategy = ExpStrategy::FoldIntoScalars);

}  // namespace idring
