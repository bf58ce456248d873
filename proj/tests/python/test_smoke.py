import hashlib

import pytest

import idring

Q = int.from_bytes(idring.GROUP_ORDER, "big")


def expand_message_xmd(msg: bytes, dst: bytes, length: int) -> bytes:
    # RFC 9380 expand_message_xmd with SHA-256, written out independently
    ell = -(-length // 32)
    dst_prime = dst + bytes([len(dst)])
    msg_prime = bytes(64) + msg + length.to_bytes(2, "big") + b"\x00" + dst_prime
    b0 = hashlib.sha256(msg_prime).digest()
    blocks = [hashlib.sha256(b0 + b"\x01" + dst_prime).digest()]
    for i in range(2, ell + 1):
        mixed = bytes(x ^ y for x, y in zip(b0, blocks[-1]))
        blocks.append(hashlib.sha256(mixed + bytes([i]) + dst_prime).digest())
    return b"".join(blocks)[:length]


def reference_scalar(data: bytes, tag: bytes) -> bytes:
    v = int.from_bytes(expand_message_xmd(data, tag, 48), "big") % Q
    assert v != 0
    return v.to_bytes(32, "big")


@pytest.fixture(scope="module")
def kgc():
    return idring.setup(seed=b"pytest")


def test_group_order():
    assert Q == 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001


def test_h1_matches_reference():
    for data in [b"", b"abc", bytes(range(200))]:
        assert idring.h1(data) == reference_scalar(data, b"IDBRS-H1")


def test_sign_input_layout():
    enc = idring.encode_sign_input(b"hi", ["a", "bc"])
    expected = (
        b"IDBRS-H1"
        + (2).to_bytes(8, "big") + b"hi"
        + (2).to_bytes(8, "big")
        + (1).to_bytes(8, "big") + b"a"
        + (2).to_bytes(8, "big") + b"bc"
    )
    assert enc == expected


def test_ring_round_trip(kgc):
    params, master = kgc
    ring = ["alice", "bob", "carol"]
    keys = {who: idring.extract(master, who) for who in ring}
    assert all(idring.validate_identity_key(params, k) for k in keys.values())
    for who in ring:
        sig = idring.ring_sign(params, ring, who, keys[who], b"hello")
        assert idring.kind(sig) == "ring-sig"
        assert idring.ring_verify(params, b"hello", sig)
        assert idring.ring_verify(params, b"hello", sig, ring=ring)
        assert not idring.ring_verify(params, b"hello", sig, ring=ring[::-1])
        assert not idring.ring_verify(params, b"hell0", sig)
        assert idring.signature_ring(sig) == [w.encode() for w in ring]


def test_h3_matches_reference(kgc):
    params, master = kgc
    sig = idring.ring_sign(params, ["x"], "x", idring.extract(master, "x"), b"m", seed=b"s")
    (c,) = idring.signature_values(sig)
    assert len(c) == 576
    assert idring.h3(c) == reference_scalar(c, b"IDBRS-H3")


def test_seeded_signing_is_deterministic(kgc):
    params, master = kgc
    key = idring.extract(master, "a")
    one = idring.ring_sign(params, ["a", "b"], "a", key, b"m", seed=b"fixed")
    two = idring.ring_sign(params, ["a", "b"], "a", key, b"m", seed=b"fixed")
    assert one == two
    assert idring.dearmor(idring.armor(one)) == one


def test_proxy_flow(kgc):
    params, _ = kgc
    orig, orig_pk = idring.keygen(params)
    proxies = [idring.keygen(params) for _ in range(3)]
    pks = [pk for _, pk in proxies]
    token = idring.delegate(orig, b"sign invoices")
    assert idring.delegation_verify(params, orig_pk, token)
    assert not idring.delegation_verify(params, pks[0], token)

    proxy_key = idring.proxy_keygen(params, token, proxies[1][0], orig_pk)
    sig = idring.proxy_sign(params, orig_pk, pks, proxy_key, b"sign invoices", b"invoice 7")
    assert idring.proxy_verify(params, orig_pk, pks, b"sign invoices", b"invoice 7", sig)
    assert not idring.proxy_verify(params, orig_pk, pks, b"sign anything", b"invoice 7", sig)
    assert not idring.proxy_verify(params, pks[2], pks, b"sign invoices", b"invoice 7", sig)

    with pytest.raises(idring.IdringError) as err:
        idring.proxy_keygen(params, token, proxies[1][0], pks[0])
    assert err.value.code == "invalid delegation"


def test_errors(kgc):
    params, master = kgc
    with pytest.raises(idring.IdringError):
        idring.extract(master, "")
    with pytest.raises(idring.IdringError):
        idring.ring_verify(params, b"m", params)
    with pytest.raises(ValueError):
        idring.kind(b"IDRS\x01\x63")


def test_pairing_counts():
    for n in range(1, 6):
        assert idring.measure("ring_sign", n)["pairings"] == 2 * n - 1
        assert idring.measure("ring_verify", n)["pairings"] == 2
        assert idring.measure("proxy_sign", n)["pairings"] == 2 * n - 1
    assert idring.cost_report(3, csv=True).startswith("n,scheme,op,pairings")
