"""Fixed-width big-endian encodings for keys and signatures.

Every blob is ``header || [inline params] || payload``:

* header (7 bytes): ``b"HPDS"``, version (1), kind (1), level (1)
* inline params, only when level is custom: hash id (1), n (1), lambda (1),
  m (1), L (2), k (2), byte length of p (2), p
* payload: the fields below, each a fixed-width unsigned big-endian integer

Payload lengths for the standard levels match the published key and
signature sizes exactly; the header and inline params are not counted.
"""

from __future__ import annotations

import struct

from .errors import BadKind, BadLength, BadMagic, CodecError, HppkError, UnknownVersion
from .keygen import PrivateKey, PublicKey
from .params import HASH_ALGS, ParameterSet, standard_params
from .polyring import CoeffGrid, FieldPoly
from .signer import Signature

__all__ = [
    "HEADER_SIZE",
    "KIND_PRIVATE",
    "KIND_PUBLIC",
    "KIND_SIGNATURE",
    "MAGIC",
    "VERSION",
    "decode_private",
    "decode_public",
    "decode_signature",
    "encode_private",
    "encode_public",
    "encode_signature",
    "peek_kind",
]

MAGIC = b"HPDS"
VERSION = 1
HEADER_SIZE = 7

KIND_PUBLIC = 1
KIND_PRIVATE = 2
KIND_SIGNATURE = 3

_LEVEL_CODES = {"I": 1, "III": 3, "V": 5, "custom": 0}
_LEVEL_NAMES = {v: k for k, v in _LEVEL_CODES.items()}
_HASH_IDS = {name: i + 1 for i, name in enumerate(HASH_ALGS)}
_HASH_NAMES = {v: k for k, v in _HASH_IDS.items()}
_CUSTOM = struct.Struct(">BBBBHHH")


def _int(v: int, width: int) -> bytes:
    return v.to_bytes(width, "big")


def _header(kind: int, prm: ParameterSet) -> bytes:
    out = MAGIC + bytes([VERSION, kind, _LEVEL_CODES[prm.level]])
    if prm.level == "custom":
        pb = prm.p.to_bytes(prm.p_bytes, "big")
        out += _CUSTOM.pack(_HASH_IDS[prm.hash_alg], prm.n, prm.lam, prm.m,
                            prm.L, prm.k, len(pb)) + pb
    return out


def _read_header(blob: bytes, kind: int) -> tuple[ParameterSet, int]:
    if len(blob) < HEADER_SIZE:
        raise BadLength(f"blob of {len(blob)} bytes is shorter than the header")
    if blob[:4] != MAGIC:
        raise BadMagic(f"bad magic {blob[:4]!r}")
    if blob[4] != VERSION:
        raise UnknownVersion(f"unsupported version {blob[4]}")
    if blob[5] != kind:
        raise BadKind(f"expected blob kind {kind}, found {blob[5]}")
    try:
        level = _LEVEL_NAMES[blob[6]]
    except KeyError:
        raise CodecError(f"unknown level code {blob[6]}") from None
    if level != "custom":
        return standard_params(level), HEADER_SIZE
    end = HEADER_SIZE + _CUSTOM.size
    if len(blob) < end:
        raise BadLength("truncated inline parameters")
    hid, n, lam, m, L, k, plen = _CUSTOM.unpack_from(blob, HEADER_SIZE)
    if len(blob) < end + plen:
        raise BadLength("truncated inline prime")
    p = int.from_bytes(blob[end:end + plen], "big")
    try:
        prm = ParameterSet("custom", p, n, lam, m, L, k, _HASH_NAMES[hid])
    except (KeyError, HppkError) as exc:
        raise CodecError(f"invalid inline parameters: {exc}") from None
    return prm, end + plen


class _Reader:
    def __init__(self, data: bytes, offset: int):
        self.data = data
        self.pos = offset

    def take(self, width: int) -> int:
        v = int.from_bytes(self.data[self.pos:self.pos + width], "big")
        self.pos += width
        return v

    def grid(self, rows: int, cols: int, width: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.take(width) for _ in range(cols)) for _ in range(rows))


def _expect(blob: bytes, offset: int, size: int):
    if len(blob) - offset != size:
        raise BadLength(f"payload is {len(blob) - offset} bytes, expected {size}")


def encode_public(pk: PublicKey) -> bytes:
    prm = pk.params
    pw, rw = prm.p_bytes, prm.R_bytes
    parts = [_header(KIND_PUBLIC, prm), _int(pk.s1, pw), _int(pk.s2, pw)]
    parts += [_int(v, pw) for v in pk.p_grid.flat()]
    parts += [_int(v, pw) for v in pk.q_grid.flat()]
    parts += [_int(v, rw) for row in pk.mu for v in row]
    parts += [_int(v, rw) for row in pk.nu for v in row]
    return b"".join(parts)


def decode_public(blob: bytes) -> PublicKey:
    prm, off = _read_header(blob, KIND_PUBLIC)
    _expect(blob, off, prm.public_key_size)
    r = _Reader(blob, off)
    pw, rw, rows, m = prm.p_bytes, prm.R_bytes, prm.rows, prm.m
    s1, s2 = r.take(pw), r.take(pw)
    pg, qg = r.grid(rows, m, pw), r.grid(rows, m, pw)
    mu, nu = r.grid(rows, m, rw), r.grid(rows, m, rw)
    if any(v >= prm.p for v in (s1, s2, *sum(pg, ()), *sum(qg, ()))):
        raise CodecError("field element not reduced mod p")
    try:
        return PublicKey(prm, s1, s2, CoeffGrid(prm.p, pg), CoeffGrid(prm.p, qg), mu, nu)
    except HppkError as exc:
        raise CodecError(str(exc)) from None


def encode_private(sk: PrivateKey) -> bytes:
    prm = sk.params
    pw, lw = prm.p_bytes, prm.L_bytes
    parts = [_header(KIND_PRIVATE, prm)]
    parts += [_int(c, pw) for c in sk.f.coeffs]
    parts += [_int(c, pw) for c in sk.h.coeffs]
    parts += [_int(v, lw) for v in (sk.R1, sk.S1, sk.R2, sk.S2)]
    return b"".join(parts)


def decode_private(blob: bytes) -> PrivateKey:
    prm, off = _read_header(blob, KIND_PRIVATE)
    _expect(blob, off, prm.private_key_size)
    r = _Reader(blob, off)
    pw, lw, deg = prm.p_bytes, prm.L_bytes, prm.lam + 1
    f = tuple(r.take(pw) for _ in range(deg))
    h = tuple(r.take(pw) for _ in range(deg))
    R1, S1, R2, S2 = (r.take(lw) for _ in range(4))
    try:
        return PrivateKey(prm, FieldPoly(prm.p, f), FieldPoly(prm.p, h), R1, S1, R2, S2)
    except HppkError as exc:
        raise CodecError(str(exc)) from None


def encode_signature(sig: Signature) -> bytes:
    lw = sig.params.L_bytes
    return _header(KIND_SIGNATURE, sig.params) + b"".join(
        _int(F, lw) + _int(H, lw) for F, H in sig.pairs)


def decode_signature(blob: bytes) -> Signature:
    prm, off = _read_header(blob, KIND_SIGNATURE)
    _expect(blob, off, prm.signature_size)
    r = _Reader(blob, off)
    lw = prm.L_bytes
    pairs = tuple((r.take(lw), r.take(lw)) for _ in range(prm.segments))
    try:
        return Signature(prm, pairs)
    except HppkError as exc:
        raise CodecError(str(exc)) from None


def peek_kind(blob: bytes) -> int:
    if len(blob) < HEADER_SIZE or blob[:4] != MAGIC:
        raise BadMagic("not an HPDS blob")
    return blob[5]
