#pragma once

#include "idring/bytes.hpp"
#include "idring/groups.hpp"

namespace idring {

class Rng;

/// Public parameters shared by every party. The hash functions H1, H2, H3
/// are fixed by the library (see hashing.hpp) and implied by curve_id.
struct SystemParams {
    CurveId curve_id = CurveId::Bls12_381;
    BasePoint base_generator;  // P
    KeyPoint key_generator;    // generator of the key group; used for pairing(P, T)
    BasePoint master_public;   // P_pub = sP

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

class MasterKey {
public:
    /// Rebuilds a master key from its scalar (e.g. when loading master.key).
    /// Throws ScalarOutOfRange for zero.
    static MasterKey restore(const Scalar& s);

    const Scalar& secret() const { return s_; }

    friend bool operator==(const MasterKey&, const MasterKey&) = default;

private:
    explicit MasterKey(const Scalar& s) : s_(s) {}
    Scalar s_;
};

struct IdentitySecretKey {
    Bytes id;
    KeyPoint point;  // S = s * H2(id)

    friend bool operator==(const IdentitySecretKey&, const IdentitySecretKey&) = default;
};

struct KgcSetup {
    SystemParams params;
    MasterKey master;
};

KgcSetup setup(Rng& rng, CurveId curve = CurveId::Bls12_381);

/// Parameters determined by an existing master key.
SystemParams params_for(const MasterKey& master, CurveId curve = CurveId::Bls12_381);

/// S = s * H2(id). Throws EmptyIdentity.
IdentitySecretKey extract(const MasterKey& master, ByteView id);

/// Q = H2(id). Throws EmptyIdentity.
KeyPoint public_key_of(ByteView id);

/// pairing(P_pub, H2(id)) == pairing(P, S).
bool validate_identity_key(const SystemParams& params, const IdentitySecretKey& key);

#if defined(IDRING_TEST_HOOKS)
namespace testing {
/// Setup with a caller-chosen master scalar, for fixed test vectors.
KgcSetup setup_with_secret(const Scalar& s, CurveId curve = CurveId::Bls12_381);
}  // namespace testing
#endif

}  // namespace idring
