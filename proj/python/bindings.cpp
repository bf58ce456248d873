// Python bindings. Every artifact crosses the boundary as its wire envelope
// (bytes), so Python code can store and pass them around unchanged.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "idring/idring.hpp"

namespace py = pybind11;
using namespace idring;

namespace {

using BytesLike = std::variant<py::bytes, std::string>;

Bytes to_raw(const BytesLike& v) {
    if (const auto* b = std::get_if<py::bytes>(&v)) {
        const std::string s = *b;
        return Bytes(s.begin(), s.end());
    }
    return to_bytes(std::get<std::string>(v));
}

py::bytes to_py(ByteView b) { return py::bytes(reinterpret_cast<const char*>(b.data()), b.size()); }

py::bytes wrap(const Artifact& a) { return to_py(encode(a)); }

template <typename T>
T unwrap(const py::bytes& b) {
    const std::string s = b;
    return decode_as<T>(dearmor(as_view(s)));
}

Rng make_rng(const std::optional<py::bytes>& seed) {
    if (!seed) return Rng::from_entropy();
    const std::string s = *seed;
    return Rng(as_view(s));
}

RingDescriptor to_ring(const std::vector<BytesLike>& members) {
    std::vector<Bytes> raw;
    for (const auto& m : members) raw.push_back(to_raw(m));
    return RingDescriptor(std::move(raw));
}

std::vector<BasePoint> to_publics(const std::vector<py::bytes>& keys) {
    std::vector<BasePoint> out;
    for (const auto& k : keys) out.push_back(unwrap<PublicKey>(k).point);
    return out;
}

py::dict counts_dict(const OpCounts& c) {
    py::dict d;
    d["pairings"] = c.pairings;
    d["base_muls"] = c.base_muls;
    d["base_adds"] = c.base_adds;
    d["key_muls"] = c.key_muls;
    d["key_adds"] = c.key_adds;
    d["gt_muls"] = c.gt_muls;
    d["gt_pows"] = c.gt_pows;
    d["scalar_muls"] = c.scalar_muls;
    d["hash_calls"] = c.hash_calls;
    d["point_hashes"] = c.point_hashes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ID-based ring signatures and proxy ring signatures over BLS12-381";

    static py::handle error_type = py::exception<Error>(m, "IdringError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = py::reinterpret_borrow<py::object>(error_type)(e.what());
            err.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), err.ptr());
        }
    });

    m.def(
        "setup",
        [](std::optional<py::bytes> seed) {
            Rng rng = make_rng(seed);
            const KgcSetup kgc = setup(rng);
            return py::make_tuple(wrap(kgc.params), wrap(kgc.master));
        },
        py::arg("seed") = py::none(), "Returns (params, master_key) envelopes.");

    m.def(
        "extract",
        [](const py::bytes& master, const BytesLike& identity) {
            return wrap(extract(unwrap<MasterKey>(master), to_raw(identity)));
        },
        py::arg("master"), py::arg("identity"));

    m.def(
        "validate_identity_key",
        [](const py::bytes& params, const py::bytes& key) {
            return validate_identity_key(unwrap<SystemParams>(params), unwrap<IdentitySecretKey>(key));
        },
        py::arg("params"), py::arg("key"));

    m.def(
        "ring_sign",
        [](const py::bytes& params, const std::vector<BytesLike>& ring, const BytesLike& signer, const py::bytes& key,
           const BytesLike& message, std::optional<py::bytes> seed) {
            const RingDescriptor r = to_ring(ring);
            const std::size_t slot = r.index_of(to_raw(signer));
            if (slot == r.size()) throw Error(ErrorCode::SignerIndexOutOfRange, "signer is not in the ring");
            Rng rng = make_rng(seed);
            return wrap(ring_sign(unwrap<SystemParams>(params), r, slot, unwrap<IdentitySecretKey>(key),
                                  to_raw(message), rng));
        },
        py::arg("params"), py::arg("ring"), py::arg("signer"), py::arg("key"), py::arg("message"),
        py::arg("seed") = py::none());

    m.def(
        "ring_verify",
        [](const py::bytes& params, const BytesLike& message, const py::bytes& signature,
           std::optional<std::vector<BytesLike>> ring) {
            const auto sig = unwrap<RingSignature>(signature);
            if (ring && !(to_ring(*ring) == sig.ring)) return false;
            return ring_verify(unwrap<SystemParams>(params), sig.ring, to_raw(message), sig);
        },
        py::arg("params"), py::arg("message"), py::arg("signature"), py::arg("ring") = py::none());

    m.def(
        "signature_ring",
        [](const py::bytes& signature) {
            const auto sig = unwrap<RingSignature>(signature);
            std::vector<py::bytes> out;
            for (const Bytes& id : sig.ring.members()) out.push_back(to_py(id));
            return out;
        },
        py::arg("signature"));

    m.def(
        "keygen",
        [](const py::bytes& params, std::optional<py::bytes> seed) {
            Rng rng = make_rng(seed);
            const LongTermKeyPair kp = generate_long_term_key(unwrap<SystemParams>(params), rng);
            return py::make_tuple(wrap(kp), wrap(PublicKey{kp.public_key}));
        },
        py::arg("params"), py::arg("seed") = py::none(), "Returns (key_pair, public_key) envelopes.");

    m.def(
        "delegate",
        [](const py::bytes& key_pair, const BytesLike& warrant) {
            return wrap(delegate(unwrap<LongTermKeyPair>(key_pair), to_raw(warrant)));
        },
        py::arg("key_pair"), py::arg("warrant"));

    m.def(
        "delegation_verify",
        [](const py::bytes& params, const py::bytes& original_pk, const py::bytes& token) {
            return delegation_verify(unwrap<SystemParams>(params), unwrap<PublicKey>(original_pk).point,
                                     unwrap<DelegationToken>(token));
        },
        py::arg("params"), py::arg("original_pk"), py::arg("token"));

    m.def(
        "proxy_keygen",
        [](const py::bytes& params, const py::bytes& token, const py::bytes& key_pair, const py::bytes& original_pk) {
            return wrap(proxy_key_gen(unwrap<SystemParams>(params), unwrap<DelegationToken>(token),
                                      unwrap<LongTermKeyPair>(key_pair), unwrap<PublicKey>(original_pk).point));
        },
        py::arg("params"), py::arg("token"), py::arg("key_pair"), py::arg("original_pk"));

    m.def(
        "proxy_sign",
        [](const py::bytes& params, const py::bytes& original_pk, const std::vector<py::bytes>& proxy_pks,
           const py::bytes& proxy_key, const BytesLike& warrant, const BytesLike& message,
           std::optional<py::bytes> seed) {
            const BasePoint original = unwrap<PublicKey>(original_pk).point;
            const auto publics = to_publics(proxy_pks);
            const auto key = unwrap<ProxyKeyPair>(proxy_key);
            const auto slot = find_proxy_slot(original, publics, key);
            if (!slot) throw Error(ErrorCode::SignerMismatch, "proxy key does not belong to any listed proxy");
            Rng rng = make_rng(seed);
            return wrap(proxy_ring_sign(unwrap<SystemParams>(params), original, publics, *slot, key, to_raw(warrant),
                                        to_raw(message), rng));
        },
        py::arg("params"), py::arg("original_pk"), py::arg("proxy_pks"), py::arg("proxy_key"), py::arg("warrant"),
        py::arg("message"), py::arg("seed") = py::none());

    m.def(
        "proxy_verify",
        [](const py::bytes& params, const py::bytes& original_pk, const std::vector<py::bytes>& proxy_pks,
           const BytesLike& warrant, const BytesLike& message, const py::bytes& signature) {
            const auto sig = unwrap<ProxyRingSignature>(signature);
            const auto publics = to_publics(proxy_pks);
            if (publics.size() != sig.c.size()) return false;
            return proxy_ring_verify(unwrap<SystemParams>(params), unwrap<PublicKey>(original_pk).point, publics,
                                     to_raw(warrant), to_raw(message), sig);
        },
        py::arg("params"), py::arg("original_pk"), py::arg("proxy_pks"), py::arg("warrant"), py::arg("message"),
        py::arg("signature"));

    m.def(
        "measure",
        [](const std::string& op, std::size_t n) {
            if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
            if (op == "ring_sign") return counts_dict(measure_ring_sign(n));
            if (op == "ring_verify") return counts_dict(measure_ring_verify(n));
            if (op == "proxy_sign") return counts_dict(measure_proxy_sign(n));
            if (op == "proxy_verify") return counts_dict(measure_proxy_verify(n));
            throw Error(ErrorCode::InvalidArgument, "unknown operation: " + op);
        },
        py::arg("op"), py::arg("n"));

    m.def(
        "cost_report",
        [](std::size_t max_n, bool csv) { return format_cost_report(cost_report(max_n), csv); }, py::arg("max_n"),
        py::arg("csv") = false);

    m.def(
        "kind",
        [](const py::bytes& envelope) {
            const std::string s = envelope;
            return std::string(kind_name(kind_of(decode(dearmor(as_view(s))))));
        },
        py::arg("envelope"));

    m.def(
        "armor",
        [](const py::bytes& envelope) {
            const std::string s = envelope;
            return armor(decode(dearmor(as_view(s))));
        },
        py::arg("envelope"));

    m.def(
        "dearmor",
        [](const BytesLike& text) {
            const Bytes raw = dearmor(to_raw(text));
            return wrap(decode(raw));
        },
        py::arg("text"));

    m.def(
        "h1",
        [](const py::bytes& data) {
            const std::string s = data;
            return to_py(h1_scalar(as_view(s)).to_bytes());
        },
        py::arg("data"), "H1 as a 32-byte big-endian scalar.");

    m.def(
        "h3",
        [](const py::bytes& target) {
            const std::string s = target;
            return to_py(h3_scalar(TargetElem::from_bytes(as_view(s))).to_bytes());
        },
        py::arg("target"), "H3 of a 576-byte target-group element.");

    m.def(
        "encode_sign_input",
        [](const BytesLike& message, const std::vector<BytesLike>& ring) {
            return to_py(encode_sign_input(to_raw(message), to_ring(ring)));
        },
        py::arg("message"), py::arg("ring"));

    m.def(
        "signature_values",
        [](const py::bytes& signature) {
            const auto sig = unwrap<RingSignature>(signature);
            std::vector<py::bytes> out;
            for (const auto& c : sig.c) out.push_back(to_py(c.to_bytes()));
            return out;
        },
        py::arg("signature"), "The ring values c_i of a ring signature, 576 bytes each.");

    m.attr("GROUP_ORDER") = to_py(group_order());
    m.attr("WIRE_VERSION") = kWireVersion;
}
