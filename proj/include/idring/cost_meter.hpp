#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "idring/op_counts.hpp"

namespace idring {

// Each measure_* call builds a fresh deterministic instance (setup, keys,
// ring of size n, signer in the middle slot) outside the counting window,
// then counts exactly one sign or verify call.
OpCounts measure_ring_sign(std::size_t r);
OpCounts measure_ring_verify(std::size_t r);
OpCounts measure_proxy_sign(std::size_t n);
OpCounts measure_proxy_verify(std::size_t n);

/// Cost of one operation in the units of the reference cost formulas:
/// pairings P, hashes H, additions A_G1, scalar multiplications M_G1,
/// target-group multiplications M_G2 and field multiplications M_Zq.
struct CostFormula {
    std::int64_t pairings = 0;
    std::int64_t hashes = 0;
    std::int64_t adds = 0;
    std::int64_t muls_source = 0;
    std::int64_t muls_target = 0;
    std::int64_t muls_field = 0;
};

/// Reference cost of the identity-based scheme for ring size n.
CostFormula predicted_ring_sign(std::int64_t n);    // (2n-1)P + nH + (n+1)A + 2n M_G1 + (n-1) M_G2
CostFormula predicted_ring_verify(std::int64_t n);  // 2P + (n+1)H + (n+1)A + (n+1)M_G1 + (n-1)M_Zq + M_G2

/// Projects measured counts onto the table's units. Additions and scalar
/// multiplications in both source groups are pooled; target-group
/// exponentiations have no column of their own and are reported separately.
CostFormula as_formula(const OpCounts& counts);

struct CostRow {
    std::size_t n = 0;
    OpCounts ring_sign, ring_verify, proxy_sign, proxy_verify;
    double ring_sign_ms = 0, ring_verify_ms = 0, proxy_sign_ms = 0, proxy_verify_ms = 0;

    /// Pairing counts equal 2n-1 (sign) and 2 (verify) for both schemes.
    bool pairings_match() const;
};

/// Rows for n = 1..max_n. Throws InvalidArgument for max_n == 0.
std::vector<CostRow> cost_report(std::size_t max_n);

/// Aligned text (measured/predicted cells) or CSV with one line per
/// (n, scheme, operation).
std::string format_cost_report(const std::vector<CostRow>& rows, bool csv);

}  // namespace idring
