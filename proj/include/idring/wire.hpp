#pragma once

// Versioned binary envelopes for every artifact the library produces.
//
//   envelope = "IDRS" || version (1 byte) || kind (1 byte) || payload
//
// Lengths and counts inside payloads are 8-byte big-endian. Points use the
// compressed encodings from groups.hpp, scalars 32 bytes big-endian. The
// full byte layouts are listed in FORMATS.md. Decoding validates every
// scalar and group element before returning.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "idring/bytes.hpp"
#include "idring/error.hpp"
#include "idring/kgc.hpp"
#include "idring/proxy_ring.hpp"
#include "idring/ring_sig.hpp"

namespace idring {

inline constexpr std::array<std::uint8_t, 4> kWireMagic = {'I', 'D', 'R', 'S'};
inline constexpr std::uint8_t kWireVersion = 1;

enum class ArtifactKind : std::uint8_t {
    Params = 1,
    IdentityKey = 2,
    RingSig = 3,
    Token = 4,
    ProxySig = 5,
    LongTermKey = 6,
    MasterKey = 7,
    PublicKey = 8,
    ProxyKey = 9,
};

std::string_view kind_name(ArtifactKind kind) noexcept;

/// A long-term public key on its own, as handed to verifiers.
struct PublicKey {
    BasePoint point;

    friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

using Artifact = std::variant<SystemParams, IdentitySecretKey, RingSignature, DelegationToken, ProxyRingSignature,
                              LongTermKeyPair, MasterKey, PublicKey, ProxyKeyPair>;

ArtifactKind kind_of(const Artifact& artifact);

Bytes encode(const Artifact& artifact);

/// Throws Error with BadMagic, UnsupportedVersion, UnknownKind, Truncated,
/// TrailingData, InvalidPoint, ScalarOutOfRange, InvalidTargetElement,
/// MalformedRing, InvalidParams, InconsistentKey, EmptyIdentity or
/// EmptyWarrant.
Artifact decode(ByteView bytes);

/// decode() restricted to one kind; throws WrongKind otherwise.
template <typename T>
T decode_as(ByteView bytes) {
    Artifact a = decode(bytes);
    if (auto* v = std::get_if<T>(&a)) return std::move(*v);
    throw Error(ErrorCode::WrongKind, std::string("unexpected artifact kind: ") + std::string(kind_name(kind_of(a))));
}

/// Hex armor: lowercase hex of the envelope.
std::string armor(const Artifact& artifact);

/// Accepts either a raw envelope or its hex armor.
Bytes dearmor(ByteView file_contents);

}  // namespace idring
