#include "idring/bytes.hpp"
#include "idring/error.hpp"
#include "idring/op_counts.hpp"

namespace idring {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyRing: return "empty ring";
        case ErrorCode::DuplicateIdentity: return "duplicate identity";
        case ErrorCode::EmptyIdentity: return "empty identity";
        case ErrorCode::EmptyWarrant: return "empty warrant";
        case ErrorCode::SignerIndexOutOfRange: return "signer index out of range";
        case ErrorCode::SignerMismatch: return "signer mismatch";
        case ErrorCode::InvalidDelegation: return "invalid delegation";
        case ErrorCode::LengthMismatch: return "length mismatch";
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::BadMagic: return "bad magic";
        case ErrorCode::UnsupportedVersion: return "unsupported version";
        case ErrorCode::UnknownKind: return "unknown kind";
        case ErrorCode::Truncated: return "truncated";
        case ErrorCode::TrailingData: return "trailing data";
        case ErrorCode::InvalidPoint: return "invalid point";
        case ErrorCode::ScalarOutOfRange: return "scalar out of range";
        case ErrorCode::InvalidTargetElement: return "invalid target element";
        case ErrorCode::MalformedRing: return "malformed ring";
        case ErrorCode::InvalidParams: return "invalid params";
        case ErrorCode::InconsistentKey: return "inconsistent key";
        case ErrorCode::BadHex: return "bad hex";
        case ErrorCode::WrongKind: return "wrong artifact kind";
    }
    return "unknown error";
}

std::string to_hex(ByteView data) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

bool is_space(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }

}  // namespace

Bytes from_hex(std::string_view hex) {
    while (!hex.empty() && is_space(hex.front())) hex.remove_prefix(1);
    while (!hex.empty() && is_space(hex.back())) hex.remove_suffix(1);
    if (hex.size() % 2 != 0) throw Error(ErrorCode::BadHex, "hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_value(hex[i]);
        int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) throw Error(ErrorCode::BadHex, "non-hex character");
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

namespace {
thread_local OpCounts* g_active = nullptr;
}

CountingScope::CountingScope() : previous_(g_active) { g_active = &counts_; }

CountingScope::~CountingScope() { g_active = previous_; }

OpCounts* detail::active_counts() noexcept { return g_active; }

}  // namespace idring
