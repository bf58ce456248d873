#include "idring/hashing.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "idring/error.hpp"
#include "idring/op_counts.hpp"

namespace idring {

RingDescriptor::RingDescriptor(std::vector<Bytes> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error(ErrorCode::EmptyRing, "empty ring");
    std::set<Bytes> seen;
    for (const Bytes& m : members_) {
        if (m.empty()) throw Error(ErrorCode::EmptyIdentity, "empty identity in ring");
        if (!seen.insert(m).second) throw Error(ErrorCode::DuplicateIdentity, "duplicate identity in ring");
    }
}

RingDescriptor RingDescriptor::from_strings(const std::vector<std::string>& ids) {
    std::vector<Bytes> members;
    members.reserve(ids.size());
    for (const auto& id : ids) members.push_back(to_bytes(id));
    return RingDescriptor(std::move(members));
}

std::size_t RingDescriptor::index_of(ByteView member) const {
    auto it = std::find_if(members_.begin(), members_.end(),
                           [&](const Bytes& m) { return std::equal(m.begin(), m.end(), member.begin(), member.end()); });
    return static_cast<std::size_t>(it - members_.begin());
}

namespace {

// expand_message_xmd to 48 bytes, reduced mod q; zero outputs are re-hashed
// with a one-byte counter suffix.
Scalar hash_to_scalar(ByteView data, std::string_view tag) {
    detail::tally(&OpCounts::hash_calls);
    const auto* dst = reinterpret_cast<const std::uint8_t*>(tag.data());
    Bytes msg(data.begin(), data.end());
    std::array<std::uint8_t, 48> wide{};
    for (std::uint8_t counter = 0;; ++counter) {
        if (counter > 0) {
            msg.resize(data.size());
            msg.push_back(counter);
        }
        blst_expand_message_xmd(wide.data(), wide.size(), msg.data(), msg.size(), dst, tag.size());
        Scalar s = Scalar::reduce(wide);
        if (!s.is_zero()) return s;
    }
}

KeyPoint hash_to_key_point(ByteView data, std::string_view tag) {
    detail::tally(&OpCounts::point_hashes);
    const auto* dst = reinterpret_cast<const std::uint8_t*>(tag.data());
    Bytes msg(data.begin(), data.end());
    for (std::uint8_t counter = 0;; ++counter) {
        if (counter > 0) {
            msg.resize(data.size());
            msg.push_back(counter);
        }
        blst_p1 out;
        blst_hash_to_g1(&out, msg.data(), msg.size(), dst, tag.size(), nullptr, 0);
        if (!blst_p1_is_inf(&out)) return KeyPoint(out);
    }
}

}  // namespace

Scalar h1_scalar(ByteView data) { return hash_to_scalar(data, kTagH1); }

KeyPoint h2_point(ByteView data) { return hash_to_key_point(data, kTagH2); }

KeyPoint warrant_point(ByteView warrant) { return hash_to_key_point(warrant, kTagWarrant); }

Scalar h3_scalar(const TargetElem& x) {
    const auto bytes = x.to_bytes();
    return hash_to_scalar(bytes, kTagH3);
}

Bytes encode_sign_input(ByteView message, const RingDescriptor& ring) {
    Bytes out;
    append(out, as_view(kTagH1));
    append_u64_be(out, message.size());
    append(out, message);
    append_u64_be(out, ring.size());
    for (const Bytes& member : ring.members()) {
        append_u64_be(out, member.size());
        append(out, member);
    }
    return out;
}

}  // namespace idring
