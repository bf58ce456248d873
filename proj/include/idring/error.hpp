#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idring {

enum class ErrorCode {
    // protocol preconditions
    EmptyRing,
    DuplicateIdentity,
    EmptyIdentity,
    EmptyWarrant,
    SignerIndexOutOfRange,
    SignerMismatch,
    InvalidDelegation,
    LengthMismatch,
    InvalidArgument,
    // wire decoding
    BadMagic,
    UnsupportedVersion,
    UnknownKind,
    Truncated,
    TrailingData,
    InvalidPoint,
    ScalarOutOfRange,
    InvalidTargetElement,
    MalformedRing,
    InvalidParams,
    InconsistentKey,
    BadHex,
    WrongKind,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. Signature verification never throws
/// for a well-formed but invalid signature; it returns false instead.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace idring
