#include "idring/cost_meter.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "idring/error.hpp"
#include "idring/kgc.hpp"
#include "idring/proxy_ring.hpp"
#include "idring/ring_sig.hpp"
#include "idring/rng.hpp"

namespace idring {

namespace {

enum class Op { RingSign, RingVerify, ProxySign, ProxyVerify };

struct Measured {
    OpCounts counts;
    double ms = 0;
};

constexpr std::string_view kMessage = "cost meter message";
constexpr std::string_view kWarrant = "cost meter warrant: delegate to all proxies";

template <typename F>
Measured counted(F&& f) {
    Measured out;
    auto start = std::chrono::steady_clock::now();
    {
        CountingScope scope;
        f();
        out.counts = scope.counts();
    }
    out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

Measured measure(Op op, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "ring size must be at least 1");
    Rng rng(0xC0575EEDull + n);
    const KgcSetup kgc = setup(rng);
    const std::size_t signer = n / 2;

    if (op == Op::RingSign || op == Op::RingVerify) {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i) ids.push_back("member-" + std::to_string(i));
        const RingDescriptor ring = RingDescriptor::from_strings(ids);
        const IdentitySecretKey key = extract(kgc.master, ring[signer]);
        if (op == Op::RingSign)
            return counted([&] { (void)ring_sign(kgc.params, ring, signer, key, as_view(kMessage), rng); });
        const RingSignature sig = ring_sign(kgc.params, ring, signer, key, as_view(kMessage), rng);
        return counted([&] { (void)ring_verify(kgc.params, ring, as_view(kMessage), sig); });
    }

    const LongTermKeyPair original = generate_long_term_key(kgc.params, rng);
    std::vector<LongTermKeyPair> proxies;
    std::vector<BasePoint> proxy_publics;
    for (std::size_t i = 0; i < n; ++i) {
        proxies.push_back(generate_long_term_key(kgc.params, rng));
        proxy_publics.push_back(proxies.back().public_key);
    }
    const DelegationToken token = delegate(original, as_view(kWarrant));
    const ProxyKeyPair key = proxy_key_gen(kgc.params, token, proxies[signer], original.public_key);
    if (op == Op::ProxySign)
        return counted([&] {
            (void)proxy_ring_sign(kgc.params, original.public_key, proxy_publics, signer, key, as_view(kWarrant),
                                  as_view(kMessage), rng);
        });
    const ProxyRingSignature sig = proxy_ring_sign(kgc.params, original.public_key, proxy_publics, signer, key,
                                                   as_view(kWarrant), as_view(kMessage), rng);
    return counted([&] {
        (void)proxy_ring_verify(kgc.params, original.public_key, proxy_publics, as_view(kWarrant), as_view(kMessage),
                                sig);
    });
}

}  // namespace

OpCounts measure_ring_sign(std::size_t r) { return measure(Op::RingSign, r).counts; }
OpCounts measure_ring_verify(std::size_t r) { return measure(Op::RingVerify, r).counts; }
OpCounts measure_proxy_sign(std::size_t n) { return measure(Op::ProxySign, n).counts; }
OpCounts measure_proxy_verify(std::size_t n) { return measure(Op::ProxyVerify, n).counts; }

CostFormula predicted_ring_sign(std::int64_t n) { return {2 * n - 1, n, n + 1, 2 * n, n - 1, 0}; }

CostFormula predicted_ring_verify(std::int64_t n) { return {2, n + 1, n + 1, n + 1, 1, n - 1}; }

CostFormula as_formula(const OpCounts& c) {
    return {static_cast<std::int64_t>(c.pairings),
            static_cast<std::int64_t>(c.hash_calls),
            static_cast<std::int64_t>(c.key_adds + c.base_adds),
            static_cast<std::int64_t>(c.key_muls + c.base_muls),
            static_cast<std::int64_t>(c.gt_muls),
            static_cast<std::int64_t>(c.scalar_muls)};
}

bool CostRow::pairings_match() const {
    const std::uint64_t sign = 2 * n - 1;
    return ring_sign.pairings == sign && proxy_sign.pairings == sign && ring_verify.pairings == 2 &&
           proxy_verify.pairings == 2;
}

std::vector<CostRow> cost_report(std::size_t max_n) {
    if (max_n == 0) throw Error(ErrorCode::InvalidArgument, "max_n must be at least 1");
    std::vector<CostRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        CostRow row;
        row.n = n;
        auto rs = measure(Op::RingSign, n);
        auto rv = measure(Op::RingVerify, n);
        auto ps = measure(Op::ProxySign, n);
        auto pv = measure(Op::ProxyVerify, n);
        row.ring_sign = rs.counts, row.ring_sign_ms = rs.ms;
        row.ring_verify = rv.counts, row.ring_verify_ms = rv.ms;
        row.proxy_sign = ps.counts, row.proxy_sign_ms = ps.ms;
        row.proxy_verify = pv.counts, row.proxy_verify_ms = pv.ms;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string cell(std::int64_t measured, std::int64_t predicted) {
    return std::to_string(measured) + "/" + std::to_string(predicted);
}

std::string ms(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

void csv_line(std::ostringstream& os, std::size_t n, std::string_view scheme, std::string_view op,
              const OpCounts& counts, const CostFormula* predicted, std::int64_t predicted_pairings, double millis) {
    const CostFormula m = as_formula(counts);
    auto pred = [&](std::int64_t CostFormula::*field) {
        return predicted ? std::to_string(predicted->*field) : std::string();
    };
    os << n << ',' << scheme << ',' << op << ',' << m.pairings << ',' << predicted_pairings << ',' << m.hashes << ','
       << pred(&CostFormula::hashes) << ',' << m.adds << ',' << pred(&CostFormula::adds) << ',' << m.muls_source << ','
       << pred(&CostFormula::muls_source) << ',' << m.muls_target << ',' << pred(&CostFormula::muls_target) << ','
       << m.muls_field << ',' << pred(&CostFormula::muls_field) << ',' << counts.gt_pows << ',' << ms(millis) << ','
       << (m.pairings == predicted_pairings ? "yes" : "no") << '\n';
}

}  // namespace

std::string format_cost_report(const std::vector<CostRow>& rows, bool csv) {
    std::ostringstream os;
    if (csv) {
        os << "n,scheme,op,pairings,pred_pairings,hashes,pred_hashes,adds,pred_adds,muls_source,pred_muls_source,"
              "muls_target,pred_muls_target,muls_field,pred_muls_field,gt_pows,ms,pairings_match\n";
        for (const CostRow& row : rows) {
            const auto n = static_cast<std::int64_t>(row.n);
            const CostFormula sign = predicted_ring_sign(n), verify = predicted_ring_verify(n);
            csv_line(os, row.n, "idbrs", "sign", row.ring_sign, &sign, sign.pairings, row.ring_sign_ms);
            csv_line(os, row.n, "idbrs", "verify", row.ring_verify, &verify, verify.pairings, row.ring_verify_ms);
            csv_line(os, row.n, "proxy", "sign", row.proxy_sign, nullptr, 2 * n - 1, row.proxy_sign_ms);
            csv_line(os, row.n, "proxy", "verify", row.proxy_verify, nullptr, 2, row.proxy_verify_ms);
        }
        return os.str();
    }

    auto col = [&](const std::string& s, int width) { os << std::setw(width) << s; };

    os << "ID-based ring signature: measured/predicted per operation\n";
    os << "  P pairings, H hashes to Z_q, A source-group additions, M1 source-group scalar multiplications,\n"
          "  M2 target-group multiplications, Mq field multiplications, E target-group exponentiations\n\n";
    col("n", 3);
    for (const char* h : {"sign.P", "sign.H", "sign.A", "sign.M1", "sign.M2", "sign.E", "sign.ms", "verify.P",
                          "verify.H", "verify.A", "verify.M1", "verify.Mq", "verify.M2", "verify.E", "verify.ms"})
        col(h, 10);
    os << '\n';
    for (const CostRow& row : rows) {
        const auto n = static_cast<std::int64_t>(row.n);
        const CostFormula ps = predicted_ring_sign(n), pv = predicted_ring_verify(n);
        const CostFormula ms_ = as_formula(row.ring_sign), mv = as_formula(row.ring_verify);
        col(std::to_string(row.n), 3);
        col(cell(ms_.pairings, ps.pairings), 10);
        col(cell(ms_.hashes, ps.hashes), 10);
        col(cell(ms_.adds, ps.adds), 10);
        col(cell(ms_.muls_source, ps.muls_source), 10);
        col(cell(ms_.muls_target, ps.muls_target), 10);
        col(std::to_string(row.ring_sign.gt_pows), 10);
        col(ms(row.ring_sign_ms), 10);
        col(cell(mv.pairings, pv.pairings), 10);
        col(cell(mv.hashes, pv.hashes), 10);
        col(cell(mv.adds, pv.adds), 10);
        col(cell(mv.muls_source, pv.muls_source), 10);
        col(cell(mv.muls_field, pv.muls_field), 10);
        col(cell(mv.muls_target, pv.muls_target), 10);
        col(std::to_string(row.ring_verify.gt_pows), 10);
        col(ms(row.ring_verify_ms), 10);
        os << '\n';
    }

    os << "\nProxy ring signature: measured pairings/expected (2n-1 sign, 2 verify)\n\n";
    col("n", 3);
    for (const char* h : {"sign.P", "sign.H", "sign.A", "sign.M1", "sign.M2", "sign.ms", "verify.P", "verify.H",
                          "verify.A", "verify.M1", "verify.M2", "verify.ms"})
        col(h, 10);
    col("pairings", 10);
    os << '\n';
    for (const CostRow& row : rows) {
        const auto n = static_cast<std::int64_t>(row.n);
        const CostFormula s = as_formula(row.proxy_sign), v = as_formula(row.proxy_verify);
        col(std::to_string(row.n), 3);
        col(cell(s.pairings, 2 * n - 1), 10);
        col(std::to_string(s.hashes), 10);
        col(std::to_string(s.adds), 10);
        col(std::to_string(s.muls_source), 10);
        col(std::to_string(s.muls_target), 10);
        col(ms(row.proxy_sign_ms), 10);
        col(cell(v.pairings, 2), 10);
        col(std::to_string(v.hashes), 10);
        col(std::to_string(v.adds), 10);
        col(std::to_string(v.muls_source), 10);
        col(std::to_string(v.muls_target), 10);
        col(ms(row.proxy_verify_ms), 10);
        col(row.pairings_match() ? "ok" : "MISMATCH", 10);
        os << '\n';
    }

    os << "\nReference formulas for comparison (not executed):\n"
          "  Zhang-Kim  sign (2n-1)P + nH + nA + nM1 + (n-1)M2      verify 2nP + nH + nM1 + nM2\n"
          "  Lin-Wu     sign (2n-1)P + H + nA + (2n-1)M1 + nM2      verify 2P + H + (n-1)A + (n+1)M1 + nM2\n"
          "  Proposed   sign (2n-1)P + nH + (n+1)A + 2nM1 + (n-1)M2 verify 2P + (n+1)H + (n+1)A + (n+1)M1 + (n-1)Mq + M2\n"
          "Only pairing counts are strategy-independent; the other columns depend on how the exponent K is applied.\n";
    return os.str();
}

}  // namespace idring
