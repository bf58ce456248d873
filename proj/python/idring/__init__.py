"""ID-based ring signatures and proxy ring signatures over BLS12-381.

Keys, parameters, tokens and signatures are passed around as ``bytes``
holding their binary envelope; ``armor``/``dearmor`` convert to and from
the hex text form used by the command-line tool.
"""

from ._core import (
    GROUP_ORDER,
    WIRE_VERSION,
    IdringError,
    armor,
    cost_report,
    dearmor,
    delegate,
    delegation_verify,
    encode_sign_input,
    extract,
    h1,
    h3,
    keygen,
    kind,
    measure,
    proxy_keygen,
    proxy_sign,
    proxy_verify,
    ring_sign,
    ring_verify,
    setup,
    signature_ring,
    signature_values,
    validate_identity_key,
)

__all__ = [
    "GROUP_ORDER",
    "WIRE_VERSION",
    "IdringError",
    "armor",
    "cost_report",
    "dearmor",
    "delegate",
    "delegation_verify",
    "encode_sign_input",
    "extract",
    "h1",
    "h3",
    "keygen",
    "kind",
    "measure",
    "proxy_keygen",
    "proxy_sign",
    "proxy_verify",
    "ring_sign",
    "ring_verify",
    "setup",
    "signature_ring",
    "signature_values",
    "validate_identity_key",
]
