#include "idring/kgc.hpp"

#include "idring/error.hpp"
#include "idring/hashing.hpp"
#include "idring/rng.hpp"

namespace idring {

MasterKey MasterKey::restore(const Scalar& s) {
    if (s.is_zero()) throw Error(ErrorCode::ScalarOutOfRange, "master key must be non-zero");
    return MasterKey(s);
}

SystemParams params_for(const MasterKey& master, CurveId curve) {
    SystemParams params;
    params.curve_id = curve;
    params.base_generator = BasePoint::generator();
    params.key_generator = KeyPoint::generator();
    params.master_public = base_mul(master.secret(), params.base_generator);
    return params;
}

KgcSetup setup(Rng& rng, CurveId curve) {
    MasterKey master = MasterKey::restore(random_scalar(rng));
    return {params_for(master, curve), master};
}

IdentitySecretKey extract(const MasterKey& master, ByteView id) {
    return {Bytes(id.begin(), id.end()), key_mul(master.secret(), public_key_of(id))};
}

KeyPoint public_key_of(ByteView id) {
    if (id.empty()) throw Error(ErrorCode::EmptyIdentity, "empty identity");
    return h2_point(id);
}

bool validate_identity_key(const SystemParams& params, const IdentitySecretKey& key) {
    if (key.id.empty()) return false;
    return pairing(params.master_public, h2_point(key.id)) == pairing(params.base_generator, key.point);
}

#if defined(IDRING_TEST_HOOKS)
KgcSetup testing::setup_with_secret(const Scalar& s, CurveId curve) {
    MasterKey master = MasterKey::restore(s);
    return {params_for(master, curve), master};
}
#endif

}  // namespace idring
