#include "idring/wire.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>

namespace idring {

std::string_view kind_name(ArtifactKind kind) noexcept {
    switch (kind) {
        case ArtifactKind::Params: return "params";
        case ArtifactKind::IdentityKey: return "identity-key";
        case ArtifactKind::RingSig: return "ring-sig";
        case ArtifactKind::Token: return "token";
        case ArtifactKind::ProxySig: return "proxy-sig";
        case ArtifactKind::LongTermKey: return "longterm-key";
        case ArtifactKind::MasterKey: return "master-key";
        case ArtifactKind::PublicKey: return "public-key";
        case ArtifactKind::ProxyKey: return "proxy-key";
    }
    return "unknown";
}

ArtifactKind kind_of(const Artifact& artifact) {
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SystemParams>) return ArtifactKind::Params;
            else if constexpr (std::is_same_v<T, IdentitySecretKey>) return ArtifactKind::IdentityKey;
            else if constexpr (std::is_same_v<T, RingSignature>) return ArtifactKind::RingSig;
            else if constexpr (std::is_same_v<T, DelegationToken>) return ArtifactKind::Token;
            else if constexpr (std::is_same_v<T, ProxyRingSignature>) return ArtifactKind::ProxySig;
            else if constexpr (std::is_same_v<T, LongTermKeyPair>) return ArtifactKind::LongTermKey;
            else if constexpr (std::is_same_v<T, MasterKey>) return ArtifactKind::MasterKey;
            else if constexpr (std::is_same_v<T, PublicKey>) return ArtifactKind::PublicKey;
            else return ArtifactKind::ProxyKey;
        },
        artifact);
}

// ----------------------------------------------------------------- encode

namespace {

template <std::size_t N>
void put(Bytes& out, const std::array<std::uint8_t, N>& a) {
    out.insert(out.end(), a.begin(), a.end());
}

void put_blob(Bytes& out, ByteView data) {
    append_u64_be(out, data.size());
    append(out, data);
}

template <typename Sig>
void put_ring_signature(Bytes& out, const Sig& sig) {
    append_u64_be(out, sig.ring.size());
    for (const Bytes& member : sig.ring.members()) put_blob(out, member);
    for (const TargetElem& c : sig.c) put(out, c.to_bytes());
    put(out, sig.t.to_bytes());
}

struct PayloadWriter {
    Bytes& out;

    void operator()(const SystemParams& p) const {
        out.push_back(static_cast<std::uint8_t>(p.curve_id));
        put(out, p.base_generator.to_bytes());
        put(out, p.key_generator.to_bytes());
        put(out, p.master_public.to_bytes());
    }
    void operator()(const IdentitySecretKey& k) const {
        put_blob(out, k.id);
        put(out, k.point.to_bytes());
    }
    void operator()(const RingSignature& s) const { put_ring_signature(out, s); }
    void operator()(const DelegationToken& t) const {
        put_blob(out, t.warrant);
        put(out, t.x_ow.to_bytes());
    }
    void operator()(const ProxyRingSignature& s) const { put_ring_signature(out, s); }
    void operator()(const LongTermKeyPair& k) const {
        put(out, k.secret.to_bytes());
        put(out, k.public_key.to_bytes());
    }
    void operator()(const MasterKey& m) const { put(out, m.secret().to_bytes()); }
    void operator()(const PublicKey& k) const { put(out, k.point.to_bytes()); }
    void operator()(const ProxyKeyPair& k) const {
        put(out, k.secret_point.to_bytes());
        put(out, k.combined_public.to_bytes());
    }
};

}  // namespace

Bytes encode(const Artifact& artifact) {
    Bytes out(kWireMagic.begin(), kWireMagic.end());
    out.push_back(kWireVersion);
    out.push_back(static_cast<std::uint8_t>(kind_of(artifact)));
    std::visit(PayloadWriter{out}, artifact);
    return out;
}

// ----------------------------------------------------------------- decode

namespace {

class Reader {
public:
    explicit Reader(ByteView data) : data_(data) {}

    ByteView take(std::size_t n) {
        if (n > remaining()) throw Error(ErrorCode::Truncated, "artifact truncated");
        ByteView out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::uint8_t byte() { return take(1)[0]; }

    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (std::uint8_t b : take(8)) v = v << 8 | b;
        return v;
    }

    Bytes blob() {
        const std::uint64_t len = u64();
        if (len > remaining()) throw Error(ErrorCode::Truncated, "length prefix exceeds artifact");
        ByteView b = take(static_cast<std::size_t>(len));
        return Bytes(b.begin(), b.end());
    }

    Scalar scalar() { return Scalar::from_bytes(take(kScalarBytes)); }
    BasePoint base_point() { return BasePoint::from_bytes(take(kBasePointBytes)); }
    KeyPoint key_point() { return KeyPoint::from_bytes(take(kKeyPointBytes)); }
    TargetElem target() { return TargetElem::from_bytes(take(kTargetBytes)); }

    std::size_t remaining() const { return data_.size() - pos_; }

    void finish() const {
        if (remaining() != 0) throw Error(ErrorCode::TrailingData, "trailing bytes after artifact");
    }

private:
    ByteView data_;
    std::size_t pos_ = 0;
};

// Ring layout shared by both signature kinds; `member_ok` vets each entry.
template <typename Sig, typename MemberCheck>
Sig read_ring_signature(Reader& in, MemberCheck member_ok) {
    const std::uint64_t count = in.u64();
    // Each member costs at least 9 bytes and each ring value 576.
    if (count == 0) throw Error(ErrorCode::MalformedRing, "empty ring");
    if (count > in.remaining() / (9 + kTargetBytes)) throw Error(ErrorCode::Truncated, "ring count exceeds artifact");
    std::vector<Bytes> members;
    members.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        members.push_back(in.blob());
        member_ok(members.back());
    }
    std::optional<RingDescriptor> ring;
    try {
        ring.emplace(std::move(members));
    } catch (const Error& e) {
        throw Error(ErrorCode::MalformedRing, std::string("malformed ring: ") + e.what());
    }
    std::vector<TargetElem> c;
    c.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) c.push_back(in.target());
    KeyPoint t = in.key_point();
    return Sig{std::move(*ring), std::move(c), t};
}

Artifact read_payload(ArtifactKind kind, Reader& in) {
    switch (kind) {
        case ArtifactKind::Params: {
            SystemParams p;
            const std::uint8_t curve = in.byte();
            if (curve != static_cast<std::uint8_t>(CurveId::Bls12_381))
                throw Error(ErrorCode::InvalidParams, "unknown curve id");
            p.curve_id = static_cast<CurveId>(curve);
            p.base_generator = in.base_point();
            p.key_generator = in.key_point();
            p.master_public = in.base_point();
            if (!(p.base_generator == BasePoint::generator()) || !(p.key_generator == KeyPoint::generator()))
                throw Error(ErrorCode::InvalidParams, "generators differ from the curve standard");
            if (p.master_public.is_identity()) throw Error(ErrorCode::InvalidParams, "master public key is identity");
            return p;
        }
        case ArtifactKind::IdentityKey: {
            IdentitySecretKey k;
            k.id = in.blob();
            if (k.id.empty()) throw Error(ErrorCode::EmptyIdentity, "empty identity");
            k.point = in.key_point();
            return k;
        }
        case ArtifactKind::RingSig:
            return read_ring_signature<RingSignature>(in, [](const Bytes&) {});
        case ArtifactKind::Token: {
            DelegationToken t;
            t.warrant = in.blob();
            if (t.warrant.empty()) throw Error(ErrorCode::EmptyWarrant, "empty warrant");
            t.x_ow = in.key_point();
            return t;
        }
        case ArtifactKind::ProxySig:
            return read_ring_signature<ProxyRingSignature>(in, [](const Bytes& member) {
                if (member.size() != kBasePointBytes)
                    throw Error(ErrorCode::MalformedRing, "proxy ring entry is not a compressed base point");
                (void)BasePoint::from_bytes(member);
            });
        case ArtifactKind::LongTermKey: {
            const Scalar x = in.scalar();
            const BasePoint pk = in.base_point();
            if (x.is_zero()) throw Error(ErrorCode::ScalarOutOfRange, "zero long-term secret");
            if (!(base_mul(x, BasePoint::generator()) == pk))
                throw Error(ErrorCode::InconsistentKey, "public key does not match secret");
            return LongTermKeyPair{x, pk};
        }
        case ArtifactKind::MasterKey:
            return MasterKey::restore(in.scalar());
        case ArtifactKind::PublicKey: {
            PublicKey k{in.base_point()};
            if (k.point.is_identity()) throw Error(ErrorCode::InvalidPoint, "public key is identity");
            return k;
        }
        case ArtifactKind::ProxyKey: {
            ProxyKeyPair k;
            k.secret_point = in.key_point();
            k.combined_public = in.base_point();
            return k;
        }
    }
    throw Error(ErrorCode::UnknownKind, "unknown artifact kind");
}

}  // namespace

Artifact decode(ByteView bytes) {
    Reader in(bytes);
    ByteView magic = in.take(kWireMagic.size());
    if (!std::equal(magic.begin(), magic.end(), kWireMagic.begin())) throw Error(ErrorCode::BadMagic, "bad magic");
    if (in.byte() != kWireVersion) throw Error(ErrorCode::UnsupportedVersion, "unsupported version");
    const std::uint8_t kind = in.byte();
    if (kind < static_cast<std::uint8_t>(ArtifactKind::Params) || kind > static_cast<std::uint8_t>(ArtifactKind::ProxyKey))
        throw Error(ErrorCode::UnknownKind, "unknown artifact kind");
    Artifact out = read_payload(static_cast<ArtifactKind>(kind), in);
    in.finish();
    return out;
}

std::string armor(const Artifact& artifact) { return to_hex(encode(artifact)); }

Bytes dearmor(ByteView contents) {
    if (contents.size() >= kWireMagic.size() && std::equal(kWireMagic.begin(), kWireMagic.end(), contents.begin()))
        return Bytes(contents.begin(), contents.end());
    return from_hex(std::string_view(reinterpret_cast<const char*>(contents.data()), contents.size()));
}

}  // namespace idring
