#pragma once

// Pairing groups over BLS12-381.
//
// The protocol layer speaks of three groups: a "base" source group holding
// the generator and every public key, a "key" source group holding hashed
// identities, private keys and the per-slot ring points, and the
// multiplicative target group. The pairing is asymmetric, so every
// expression e(X, Y) of the scheme is arranged with X in the base group and
// Y in the key group. On BLS12-381 the base group is G2 and the key group is
// G1, which keeps the many per-signature points at 48 bytes.

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>

#include <blst.h>

#include "idring/bytes.hpp"

namespace idring {

enum class CurveId : std::uint8_t {
    Bls12_381 = 1,
};

std::string_view curve_name(CurveId id) noexcept;

inline constexpr std::size_t kScalarBytes = 32;
inline constexpr std::size_t kBasePointBytes = 96;
inline constexpr std::size_t kKeyPointBytes = 48;
inline constexpr std::size_t kTargetBytes = 576;

class Rng;

/// Element of Z_q, always held in reduced form.
class Scalar {
public:
    Scalar() = default;  // zero

    static Scalar zero() { return {}; }
    static Scalar one() { return from_u64(1); }
    static Scalar from_u64(std::uint64_t v);

    /// Exactly kScalarBytes big-endian bytes; rejects values >= q.
    static Scalar from_bytes(ByteView be);

    /// Reduces an arbitrary-length big-endian integer modulo q.
    static Scalar reduce(ByteView be);

    std::array<std::uint8_t, kScalarBytes> to_bytes() const;
    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    const blst_scalar& raw() const { return v_; }
    explicit Scalar(const blst_scalar& v) : v_(v) {}

private:
    blst_scalar v_{};
};

/// The prime group order q, big-endian.
std::array<std::uint8_t, kScalarBytes> group_order();

class BasePoint {
public:
    BasePoint();  // identity

    static BasePoint generator();
    static BasePoint identity() { return {}; }

    /// Compressed form; rejects off-curve and out-of-subgroup encodings.
    static BasePoint from_bytes(ByteView compressed);
    std::array<std::uint8_t, kBasePointBytes> to_bytes() const;

    bool is_identity() const;
    friend bool operator==(const BasePoint& a, const BasePoint& b);

    const blst_p2& raw() const { return p_; }
    explicit BasePoint(const blst_p2& p) : p_(p) {}

private:
    blst_p2 p_;
};

class KeyPoint {
public:
    KeyPoint();  // identity

    static KeyPoint generator();
    static KeyPoint identity() { return {}; }

    static KeyPoint from_bytes(ByteView compressed);
    std::array<std::uint8_t, kKeyPointBytes> to_bytes() const;

    bool is_identity() const;
    bool in_subgroup() const;
    friend bool operator==(const KeyPoint& a, const KeyPoint& b);

    const blst_p1& raw() const { return p_; }
    explicit KeyPoint(const blst_p1& p) : p_(p) {}

private:
    blst_p1 p_;
};

/// Element of the order-q subgroup of Fp12^*.
class TargetElem {
public:
    TargetElem();  // identity

    static TargetElem one() { return {}; }

    /// Twelve 48-byte big-endian base-field coefficients in tower order
    /// (c0.c0.c0, c0.c0.c1, c0.c1.c0, ... c1.c2.c1). Rejects non-canonical
    /// coefficients and elements outside the order-q subgroup.
    static TargetElem from_bytes(ByteView bytes);
    std::array<std::uint8_t, kTargetBytes> to_bytes() const;

    bool is_one() const;
    friend bool operator==(const TargetElem& a, const TargetElem& b);

    const blst_fp12& raw() const { return v_; }
    explicit TargetElem(const blst_fp12& v) : v_(v) {}

private:
    blst_fp12 v_;
};

TargetElem pairing(const BasePoint& a, const KeyPoint& b);

BasePoint base_mul(const Scalar& k, const BasePoint& p);
BasePoint base_add(const BasePoint& p, const BasePoint& q);

KeyPoint key_mul(const Scalar& k, const KeyPoint& p);
KeyPoint key_add(const KeyPoint& p, const KeyPoint& q);
KeyPoint key_sub(const KeyPoint& p, const KeyPoint& q);

TargetElem gt_mul(const TargetElem& x, const TargetElem& y);
TargetElem gt_pow(const TargetElem& x, const Scalar& k);

inline BasePoint operator*(const Scalar& k, const BasePoint& p) { return base_mul(k, p); }
inline BasePoint operator+(const BasePoint& p, const BasePoint& q) { return base_add(p, q); }
inline KeyPoint operator*(const Scalar& k, const KeyPoint& p) { return key_mul(k, p); }
inline KeyPoint operator+(const KeyPoint& p, const KeyPoint& q) { return key_add(p, q); }
inline KeyPoint operator-(const KeyPoint& p, const KeyPoint& q) { return key_sub(p, q); }
inline TargetElem operator*(const TargetElem& x, const TargetElem& y) { return gt_mul(x, y); }

/// Uniform over [1, q-1].
Scalar random_scalar(Rng& rng);

/// Uniform over the key group.
KeyPoint random_key_point(Rng& rng);

}  // namespace idring
