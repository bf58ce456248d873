#pragma once

// Identity-based ring signatures.
//
// Slots are numbered 0..r-1 and c[i] is the ring value entering slot i, so
// slot i maps c[i] to c[(i+1) mod r]:
//
//   c[i+1] = [ e(P_pub, H3(c[i]) Q_i) * e(P, T_i) ]^K,   K = H1(m || L)
//
// The signer at slot k starts the ring at c[k+1] = e(P, A)^K for a random
// A, walks the other r-1 slots with random T_i, and closes it with
// T_k = A - H3(c[k]) S_k. The signature is (L; c[0..r-1]; T = sum T_i) and
// is checked with the aggregate equation
//
//   prod c[i] == [ e(P_pub, sum H3(c[i]) Q_i) * e(P, T) ]^K
//
// which costs two pairings regardless of r. Signing costs 2r-1.

#include <cstddef>
#include <vector>

#include "idring/bytes.hpp"
#include "idring/groups.hpp"
#include "idring/hashing.hpp"
#include "idring/kgc.hpp"

namespace idring {

class Rng;

/// How the outer exponent K is applied. FoldIntoScalars multiplies K into
/// the source-group scalars before pairing; TargetPow pairs first and raises
/// the product to K in the target group. Both yield identical values.
enum class ExpStrategy {
    FoldIntoScalars,
    TargetPow,
};

struct RingSignature {
    RingDescriptor ring;
    std::vector<TargetElem> c;  // c[i] enters slot i
    KeyPoint t;                 // sum of the per-slot T_i

    friend bool operator==(const RingSignature&, const RingSignature&) = default;
};

/// Signer-side intermediates, exposed for the per-link tests.
struct SignDebugTrace {
    Scalar k;
    KeyPoint a;
    std::vector<KeyPoint> t_slots;
};

/// Throws SignerIndexOutOfRange, or SignerMismatch when ring[signer] is not
/// key.id.
RingSignature ring_sign(const SystemParams& params, const RingDescriptor& ring, std::size_t signer,
                        const IdentitySecretKey& key, ByteView message, Rng& rng,
                        SignDebugTrace* trace = nullptr, ExpStrategy strategy = ExpStrategy::FoldIntoScalars);

/// False for a signature over a different ring, message or key set. Throws
/// LengthMismatch when the number of ring values differs from the ring size.
bool ring_verify(const SystemParams& params, const RingDescriptor& ring, ByteView message, const RingSignature& sig,
                 ExpStrategy strategy = ExpStrategy::FoldIntoScalars);

/// Verifies against the ring embedded in the signature.
inline bool ring_verify(const SystemParams& params, ByteView message, const RingSignature& sig) {
    return ring_verify(params, sig.ring, message, sig);
}

}  // namespace idring
