"""Exact big-integer helpers: modular inverse, Barrett reduction, sampling.

Python ints are arbitrary precision, so every value here is exact.  The
Barrett routines deliberately do *not* fold a result in ``[n, 2n)`` back into
``[0, n)``; callers that embed the floor quotient in a public equation need
to see the raw value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping

from .errors import InvalidRange, NotCoprime, TailOverflow, ZeroModulus

__all__ = [
    "BarrettCtx",
    "barrett_mu",
    "barrett_mulmod",
    "barrett_quotient",
    "barrett_reduce",
    "ceil_div",
    "mod_inverse",
    "random_nat_below",
]


def mod_inverse(a: int, n: int) -> int:
    """Return ``v`` in ``[1, n)`` with ``a * v == 1 (mod n)``."""
    if n < 2:
        raise ZeroModulus(f"modulus must be >= 2, got {n}")
    if a < 0:
        raise InvalidRange("a must be non-negative")
    if gcd(a % n, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    return pow(a, -1, n)


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def barrett_mu(b: int, n: int, k: int) -> int:
    """Barrett parameter ``floor(2**k * b / n)`` for multiplicand ``b``."""
    if not 0 <= b < n:
        raise InvalidRange(f"multiplicand {b} not in [0, {n})")
    if k < n.bit_length():
        raise InvalidRange(f"k={k} is below bit_length(n)={n.bit_length()}")
    return (b << k) // n


def barrett_quotient(a: int, mu: int, k: int) -> int:
    return (a * mu) >> k


def barrett_reduce(a: int, b: int, n: int, mu: int, k: int) -> int:
    """Raw Barrett value ``a*b - n*floor(a*mu / 2**k)``; lies in ``[0, 2n)``."""
    return a * b - n * ((a * mu) >> k)


@dataclass(frozen=True)
class BarrettCtx:
    """A modulus, its Barrett exponent, and precomputed ``mu`` per multiplicand."""

    modulus: int
    k: int
    mus: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.modulus < 2:
            raise ZeroModulus(f"modulus must be >= 2, got {self.modulus}")
        if self.k < self.modulus.bit_length():
            raise InvalidRange("k must be at least bit_length(modulus)")

    @classmethod
    def build(cls, modulus: int, k: int, multiplicands: Iterable[int] = ()) -> "BarrettCtx":
        mus = {b: barrett_mu(b, modulus, k) for b in multiplicands}
        return cls(modulus, k, mus)

    def with_multiplicand(self, b: int) -> "BarrettCtx":
        if b in self.mus:
            return self
        mus = dict(self.mus)
        mus[b] = barrett_mu(b, self.modulus, self.k)
        return BarrettCtx(self.modulus, self.k, mus)

    @property
    def margin(self) -> int:
        return self.k - self.modulus.bit_length()


def barrett_mulmod(a: int, b: int, ctx: BarrettCtx) -> int:
    """``a*b mod n`` through the precomputed ``mu`` of ``b``.

    Raises TailOverflow when the quotient falls one short (result in
    ``[n, 2n)``); the caller decides whether to retry or correct.
    """
    n = ctx.modulus
    if not (0 <= a < n and 0 <= b < n):
        raise InvalidRange("operands must lie in [0, modulus)")
    try:
        mu = ctx.mus[b]
    except KeyError:
        raise InvalidRange(f"no precomputed mu for multiplicand {b}") from None
    z = barrett_reduce(a, b, n, mu, ctx.k)
    if z >= n:
        raise TailOverflow(z, n)
    return z


def random_nat_below(bound: int, rng) -> int:
    """Uniform integer in ``[0, bound)`` by rejection sampling.

    ``rng`` needs only ``getrandbits``; ``random.Random`` (seeded) and
    ``secrets.SystemRandom`` both qualify.
    """
    if bound < 1:
        raise InvalidRange("bound must be >= 1")
    if bound == 1:
        return 0
    nbits = (bound - 1).bit_length()
    while True:
        v = rng.getrandbits(nbits)
        if v < bound:
            return v
