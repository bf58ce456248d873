#include "idring/groups.hpp"

#include <algorithm>

#include "idring/error.hpp"
#include "idring/op_counts.hpp"
#include "idring/rng.hpp"

namespace idring {

using detail::tally;

std::string_view curve_name(CurveId id) noexcept {
    switch (id) {
        case CurveId::Bls12_381: return "BLS12-381";
    }
    return "unknown";
}

// ---------------------------------------------------------------- Scalar

namespace {

blst_fr to_fr(const blst_scalar& s) {
    blst_fr f;
    blst_fr_from_scalar(&f, &s);
    return f;
}

Scalar from_fr(const blst_fr& f) {
    blst_scalar s;
    blst_scalar_from_fr(&s, &f);
    return Scalar(s);
}

}  // namespace

Scalar Scalar::from_u64(std::uint64_t v) {
    const std::uint64_t limbs[4] = {v, 0, 0, 0};
    Scalar s;
    blst_scalar_from_uint64(&s.v_, limbs);
    return s;
}

Scalar Scalar::from_bytes(ByteView be) {
    if (be.size() != kScalarBytes) throw Error(ErrorCode::ScalarOutOfRange, "scalar must be 32 bytes");
    Scalar s;
    blst_scalar_from_bendian(&s.v_, be.data());
    if (!blst_scalar_fr_check(&s.v_)) throw Error(ErrorCode::ScalarOutOfRange, "scalar not below group order");
    return s;
}

Scalar Scalar::reduce(ByteView be) {
    Scalar s;
    blst_scalar_from_be_bytes(&s.v_, be.data(), be.size());
    return s;
}

std::array<std::uint8_t, kScalarBytes> Scalar::to_bytes() const {
    std::array<std::uint8_t, kScalarBytes> out{};
    blst_bendian_from_scalar(out.data(), &v_);
    return out;
}

bool Scalar::is_zero() const {
    return std::all_of(std::begin(v_.b), std::end(v_.b), [](std::uint8_t b) { return b == 0; });
}

Scalar Scalar::operator+(const Scalar& o) const {
    blst_fr a = to_fr(v_), b = to_fr(o.v_), r;
    blst_fr_add(&r, &a, &b);
    return from_fr(r);
}

Scalar Scalar::operator-(const Scalar& o) const {
    blst_fr a = to_fr(v_), b = to_fr(o.v_), r;
    blst_fr_sub(&r, &a, &b);
    return from_fr(r);
}

Scalar Scalar::operator*(const Scalar& o) const {
    tally(&OpCounts::scalar_muls);
    blst_fr a = to_fr(v_), b = to_fr(o.v_), r;
    blst_fr_mul(&r, &a, &b);
    return from_fr(r);
}

Scalar Scalar::operator-() const { return Scalar{} - *this; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
    blst_fr a = to_fr(v_), r;
    blst_fr_inverse(&r, &a);
    return from_fr(r);
}

bool operator==(const Scalar& a, const Scalar& b) {
    return std::equal(std::begin(a.v_.b), std::end(a.v_.b), std::begin(b.v_.b));
}

std::array<std::uint8_t, kScalarBytes> group_order() {
    return {0x73, 0xed, 0xa7, 0x53, 0x29, 0x9d, 0x7d, 0x48, 0x33, 0x39, 0xd8,
            0x08, 0x09, 0xa1, 0xd8, 0x05, 0x53, 0xbd, 0xa4, 0x02, 0xff, 0xfe,
            0x5b, 0xfe, 0xff, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x01};
}

// ------------------------------------------------------------ BasePoint

BasePoint::BasePoint() : p_{} {}

BasePoint BasePoint::generator() { return BasePoint(*blst_p2_generator()); }

BasePoint BasePoint::from_bytes(ByteView compressed) {
    if (compressed.size() != kBasePointBytes) throw Error(ErrorCode::InvalidPoint, "base point must be 96 bytes");
    blst_p2_affine aff;
    if (blst_p2_uncompress(&aff, compressed.data()) != BLST_SUCCESS)
        throw Error(ErrorCode::InvalidPoint, "base point encoding rejected");
    if (!blst_p2_affine_in_g2(&aff)) throw Error(ErrorCode::InvalidPoint, "base point outside subgroup");
    blst_p2 p;
    blst_p2_from_affine(&p, &aff);
    return BasePoint(p);
}

std::array<std::uint8_t, kBasePointBytes> BasePoint::to_bytes() const {
    std::array<std::uint8_t, kBasePointBytes> out{};
    blst_p2_compress(out.data(), &p_);
    return out;
}

bool BasePoint::is_identity() const { return blst_p2_is_inf(&p_); }

bool operator==(const BasePoint& a, const BasePoint& b) { return blst_p2_is_equal(&a.p_, &b.p_); }

// ------------------------------------------------------------- KeyPoint

KeyPoint::KeyPoint() : p_{} {}

KeyPoint KeyPoint::generator() { return KeyPoint(*blst_p1_generator()); }

KeyPoint KeyPoint::from_bytes(ByteView compressed) {
    if (compressed.size() != kKeyPointBytes) throw Error(ErrorCode::InvalidPoint, "key point must be 48 bytes");
    blst_p1_affine aff;
    if (blst_p1_uncompress(&aff, compressed.data()) != BLST_SUCCESS)
        throw Error(ErrorCode::InvalidPoint, "key point encoding rejected");
    if (!blst_p1_affine_in_g1(&aff)) throw Error(ErrorCode::InvalidPoint, "key point outside subgroup");
    blst_p1 p;
    blst_p1_from_affine(&p, &aff);
    return KeyPoint(p);
}

std::array<std::uint8_t, kKeyPointBytes> KeyPoint::to_bytes() const {
    std::array<std::uint8_t, kKeyPointBytes> out{};
    blst_p1_compress(out.data(), &p_);
    return out;
}

bool KeyPoint::is_identity() const { return blst_p1_is_inf(&p_); }

bool KeyPoint::in_subgroup() const { return blst_p1_in_g1(&p_); }

bool operator==(const KeyPoint& a, const KeyPoint& b) { return blst_p1_is_equal(&a.p_, &b.p_); }

// ----------------------------------------------------------- TargetElem

namespace {

template <typename F>
void for_each_coefficient(blst_fp12& v, F&& f) {
    std::size_t idx = 0;
    for (auto& fp6 : v.fp6)
        for (auto& fp2 : fp6.fp2)
            for (auto& fp : fp2.fp) f(fp, idx++);
}

template <typename F>
void for_each_coefficient(const blst_fp12& v, F&& f) {
    std::size_t idx = 0;
    for (const auto& fp6 : v.fp6)
        for (const auto& fp2 : fp6.fp2)
            for (const auto& fp : fp2.fp) f(fp, idx++);
}

}  // namespace

TargetElem::TargetElem() : v_(*blst_fp12_one()) {}

TargetElem TargetElem::from_bytes(ByteView bytes) {
    if (bytes.size() != kTargetBytes) throw Error(ErrorCode::InvalidTargetElement, "target element must be 576 bytes");
    blst_fp12 v;
    bool canonical = true;
    for_each_coefficient(v, [&](blst_fp& fp, std::size_t i) {
        const std::uint8_t* chunk = bytes.data() + 48 * i;
        blst_fp_from_bendian(&fp, chunk);
        std::array<std::uint8_t, 48> back{};
        blst_bendian_from_fp(back.data(), &fp);
        canonical = canonical && std::equal(back.begin(), back.end(), chunk);
    });
    if (!canonical) throw Error(ErrorCode::InvalidTargetElement, "non-canonical field coefficient");
    if (!blst_fp12_in_group(&v)) throw Error(ErrorCode::InvalidTargetElement, "target element outside subgroup");
    return TargetElem(v);
}

std::array<std::uint8_t, kTargetBytes> TargetElem::to_bytes() const {
    std::array<std::uint8_t, kTargetBytes> out{};
    for_each_coefficient(v_, [&](const blst_fp& fp, std::size_t i) { blst_bendian_from_fp(out.data() + 48 * i, &fp); });
    return out;
}

bool TargetElem::is_one() const { return blst_fp12_is_one(&v_); }

bool operator==(const TargetElem& a, const TargetElem& b) { return blst_fp12_is_equal(&a.v_, &b.v_); }

// ------------------------------------------------------------ operations

TargetElem pairing(const BasePoint& a, const KeyPoint& b) {
    tally(&OpCounts::pairings);
    if (a.is_identity() || b.is_identity()) return TargetElem::one();
    blst_p2_affine qa;
    blst_p1_affine pa;
    blst_p2_to_affine(&qa, &a.raw());
    blst_p1_to_affine(&pa, &b.raw());
    blst_fp12 ml, out;
    blst_miller_loop(&ml, &qa, &pa);
    blst_final_exp(&out, &ml);
    return TargetElem(out);
}

BasePoint base_mul(const Scalar& k, const BasePoint& p) {
    tally(&OpCounts::base_muls);
    blst_p2 out;
    blst_p2_mult(&out, &p.raw(), k.raw().b, 255);
    return BasePoint(out);
}

BasePoint base_add(const BasePoint& p, const BasePoint& q) {
    tally(&OpCounts::base_adds);
    blst_p2 out;
    blst_p2_add_or_double(&out, &p.raw(), &q.raw());
    return BasePoint(out);
}

KeyPoint key_mul(const Scalar& k, const KeyPoint& p) {
    tally(&OpCounts::key_muls);
    blst_p1 out;
    blst_p1_mult(&out, &p.raw(), k.raw().b, 255);
    return KeyPoint(out);
}

KeyPoint key_add(const KeyPoint& p, const KeyPoint& q) {
    tally(&OpCounts::key_adds);
    blst_p1 out;
    blst_p1_add_or_double(&out, &p.raw(), &q.raw());
    return KeyPoint(out);
}

KeyPoint key_sub(const KeyPoint& p, const KeyPoint& q) {
    tally(&OpCounts::key_adds);
    blst_p1 neg = q.raw();
    blst_p1_cneg(&neg, true);
    blst_p1 out;
    blst_p1_add_or_double(&out, &p.raw(), &neg);
    return KeyPoint(out);
}

TargetElem gt_mul(const TargetElem& x, const TargetElem& y) {
    tally(&OpCounts::gt_muls);
    blst_fp12 out;
    blst_fp12_mul(&out, &x.raw(), &y.raw());
    return TargetElem(out);
}

TargetElem gt_pow(const TargetElem& x, const Scalar& k) {
    tally(&OpCounts::gt_pows);
    // Every TargetElem lies in the cyclotomic subgroup, so the cheaper
    // cyclotomic squaring is valid throughout.
    blst_fp12 acc = *blst_fp12_one();
    for (std::uint8_t byte : k.to_bytes()) {
        for (int bit = 7; bit >= 0; --bit) {
            blst_fp12_cyclotomic_sqr(&acc, &acc);
            if ((byte >> bit) & 1) blst_fp12_mul(&acc, &acc, &x.raw());
        }
    }
    return TargetElem(acc);
}

Scalar random_scalar(Rng& rng) {
    // 48 bytes keep the modular bias below 2^-128.
    std::array<std::uint8_t, 48> wide{};
    for (;;) {
        rng.fill(wide);
        Scalar s = Scalar::reduce(wide);
        if (!s.is_zero()) return s;
    }
}

KeyPoint random_key_point(Rng& rng) { return key_mul(random_scalar(rng), KeyPoint::generator()); }

}  // namespace idring
