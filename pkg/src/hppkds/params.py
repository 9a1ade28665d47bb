"""Parameter sets, byte-size formulas, and message-digest segmentation."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .errors import InvalidParameters, UnknownLevel

__all__ = [
    "HASH_ALGS",
    "LEVELS",
    "ParameterSet",
    "custom_params",
    "hash_to_segments",
    "standard_params",
    "toy_params",
]

HASH_ALGS = ("sha256", "sha384", "sha512")

# (p, hash) per level; degrees are all 1, L and k follow the sizing rule.
_LEVEL_TABLE = {
    "I": (2**64 - 59, "sha256"),
    "III": (2**96 - 17, "sha384"),
    "V": (2**128 - 159, "sha512"),
}
LEVELS = tuple(_LEVEL_TABLE)


def _nbytes(bits: int) -> int:
    return (bits + 7) // 8


@dataclass(frozen=True)
class ParameterSet:
    level: str
    p: int
    n: int
    lam: int
    m: int
    L: int
    k: int
    hash_alg: str

    def __post_init__(self):
        if self.p < 3:
            raise InvalidParameters("p must be an odd prime")
        if min(self.n, self.lam, self.m) < 0 or self.m < 1:
            raise InvalidParameters("degrees must be >= 0 and m >= 1")
        if self.hash_alg not in HASH_ALGS:
            raise InvalidParameters(f"unsupported hash {self.hash_alg!r}")
        # S > p^2 must hold for every L-bit S with its top bit set
        if self.L - 1 < 2 * self.p.bit_length():
            raise InvalidParameters("L too small: hidden rings must exceed p**2")
        if self.k < self.L:
            raise InvalidParameters("Barrett exponent k must be >= L")

    @property
    def p_bits(self) -> int:
        return self.p.bit_length()

    @property
    def p_bytes(self) -> int:
        return _nbytes(self.p_bits)

    @property
    def L_bytes(self) -> int:
        return _nbytes(self.L)

    @property
    def R_bytes(self) -> int:
        return _nbytes(self.k)

    @property
    def rows(self) -> int:
        """Number of x-powers in a product polynomial, n + lambda + 1."""
        return self.n + self.lam + 1

    @property
    def digest_bits(self) -> int:
        return hashlib.new(self.hash_alg).digest_size * 8

    @property
    def segments(self) -> int:
        return -(-self.digest_bits // self.p_bits)

    @property
    def public_key_size(self) -> int:
        return 2 * self.m * self.rows * (self.R_bytes + self.p_bytes) + 2 * self.p_bytes

    @property
    def private_key_size(self) -> int:
        return 2 * (self.lam + 1) * self.p_bytes + 4 * self.L_bytes

    @property
    def signature_size(self) -> int:
        return 2 * self.L_bytes * self.segments

    def digest(self, message: bytes) -> bytes:
        return hashlib.new(self.hash_alg, message).digest()


def standard_params(level: str) -> ParameterSet:
    """One of the three standard levels ``"I"``, ``"III"``, ``"V"``."""
    try:
        p, alg = _LEVEL_TABLE[level]
    except KeyError:
        raise UnknownLevel(f"unknown security level {level!r}") from None
    L = 2 * p.bit_length() + 16
    return ParameterSet(level, p, 1, 1, 1, L, L + 32, alg)


def custom_params(p: int, n: int, lam: int, m: int, L: int, k: int,
                  hash_alg: str = "sha256", *, check_prime: bool = True) -> ParameterSet:
    """Free-form parameters for tests and toy-scale cryptanalysis."""
    if check_prime:
        from sympy import isprime

        if not isprime(p):
            raise InvalidParameters(f"{p} is not prime")
    return ParameterSet("custom", p, n, lam, m, L, k, hash_alg)


def toy_params(m: int = 2, L: int = 13, k: int = 24) -> ParameterSet:
    """The worked toy configuration: F_13, linear f, h and B, R = 2**24."""
    return custom_params(13, 1, 1, m, L, k, "sha256")


def hash_to_segments(message: bytes, params: ParameterSet) -> list[int]:
    """Split ``hash(message)`` big-endian into |p|-bit chunks, each reduced mod p.

    When the digest length is not a multiple of |p|, the final chunk carries
    the leftover low-order bits.
    """
    digest = params.digest(message)
    d = int.from_bytes(digest, "big")
    total = len(digest) * 8
    width = params.p_bits
    out = []
    for t in range(params.segments):
        shift = total - (t + 1) * width
        if shift >= 0:
            chunk = (d >> shift) & ((1 << width) - 1)
        else:
            chunk = d & ((1 << (width + shift)) - 1)
        out.append(chunk % params.p)
    return out
