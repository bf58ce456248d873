#pragma once

#include <string_view>
#include <vector>

#include "idring/bytes.hpp"
#include "idring/groups.hpp"

namespace idring {

// Domain-separation tags. Each hash below uses exactly one of them.
inline constexpr std::string_view kTagH1 = "IDBRS-H1";
inline constexpr std::string_view kTagH2 = "IDBRS-H2";
inline constexpr std::string_view kTagH3 = "IDBRS-H3";
inline constexpr std::string_view kTagWarrant = "PROXY-W";

/// Ordered, duplicate-free list of ring members. For the identity-based
/// scheme the entries are identity strings; for the proxy scheme they are
/// compressed combined public keys.
class RingDescriptor {
public:
    /// Throws EmptyRing, EmptyIdentity or DuplicateIdentity.
    explicit RingDescriptor(std::vector<Bytes> members);

    static RingDescriptor from_strings(const std::vector<std::string>& ids);

    std::size_t size() const { return members_.size(); }
    const Bytes& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Bytes>& members() const { return members_; }

    /// Position of `member`, or size() when absent.
    std::size_t index_of(ByteView member) const;

    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

private:
    std::vector<Bytes> members_;
};

/// H1: {0,1}* -> Z_q^*. Output is never zero.
Scalar h1_scalar(ByteView data);

/// H2: {0,1}* -> key group, via the RFC 9380 BLS12-381 G1 suite under the
/// IDBRS-H2 tag. Never returns the identity.
KeyPoint h2_point(ByteView data);

/// H2 applied to a warrant: same construction under the PROXY-W tag, so a
/// warrant and an identity with equal bytes hash to unrelated points.
KeyPoint warrant_point(ByteView warrant);

/// H3: target group -> Z_q^*, over the canonical 576-byte encoding.
Scalar h3_scalar(const TargetElem& x);

/// The byte string fed to H1 for message m and ring L:
///   "IDBRS-H1" || u64(len m) || m || u64(|L|) || for each member: u64(len) || member
/// with every u64 big-endian.
Bytes encode_sign_input(ByteView message, const RingDescriptor& ring);

}  // namespace idring
