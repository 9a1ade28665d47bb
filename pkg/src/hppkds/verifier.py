"""Public verification: signature-embedded coefficients and the polynomial check."""

from __future__ import annotations

import secrets
from dataclasses import dataclass

from .bigmod import random_nat_below
from .errors import MalformedSignature
from .keygen import PublicKey
from .params import hash_to_segments

__all__ = [
    "DEFAULT_ROUNDS",
    "VerifyTranscript",
    "column_values",
    "columns_match",
    "embedded_coeffs",
    "transcript",
    "verify",
    "verify_segment",
]

DEFAULT_ROUNDS = 2

Rows = tuple[tuple[int, ...], ...]


def _embed(e: int, scaled: Rows, barrett: Rows, s: int, p: int, k: int) -> Rows:
    out = []
    for srow, brow in zip(scaled, barrett):
        row = []
        for c, mu in zip(srow, brow):
            a = e * c % p
            b = s * ((e * mu) >> k) % p
            row.append((a + p - b) % p)
        out.append(tuple(row))
    return tuple(out)


def embedded_coeffs(F: int, H: int, pk: PublicKey) -> tuple[Rows, Rows]:
    """Grids ``U_ij(H)`` and ``V_ij(F)``, each indexed ``[i][j-1]``.

    ``U_ij = H p'_ij - s1 floor(H mu_ij / 2**k) mod p`` and symmetrically for
    ``V`` with ``F, q', s2, nu``.
    """
    prm = pk.params
    U = _embed(H, pk.p_grid.rows, pk.mu, pk.s1, prm.p, prm.k)
    V = _embed(F, pk.q_grid.rows, pk.nu, pk.s2, prm.p, prm.k)
    return U, V


def column_values(grid: Rows, x: int, p: int) -> tuple[int, ...]:
    """``sum_i grid[i][j] x**i mod p`` for every column ``j``."""
    acc = [0] * len(grid[0])
    for row in reversed(grid):
        acc = [(a * x + c) % p for a, c in zip(acc, row)]
    return tuple(acc)


def columns_match(pk: PublicKey, x: int, F: int, H: int) -> bool:
    """True iff the check passes for every choice of ``u`` (column-wise equality)."""
    U, V = embedded_coeffs(F, H, pk)
    p = pk.params.p
    return column_values(U, x, p) == column_values(V, x, p)


@dataclass(frozen=True)
class VerifyTranscript:
    x: int
    u: tuple[int, ...]
    U: Rows
    V: Rows
    left: int    # V(F, x, u)
    right: int   # U(H, x, u)

    @property
    def passed(self) -> bool:
        return self.left == self.right


def transcript(pk: PublicKey, x: int, F: int, H: int, u) -> VerifyTranscript:
    p = pk.params.p
    u = tuple(v % p for v in u)
    if len(u) != pk.params.m:
        raise ValueError(f"expected {pk.params.m} noise values, got {len(u)}")
    U, V = embedded_coeffs(F, H, pk)
    left = sum(c * uj for c, uj in zip(column_values(V, x, p), u)) % p
    right = sum(c * uj for c, uj in zip(column_values(U, x, p), u)) % p
    return VerifyTranscript(x, u, U, V, left, right)


def verify_segment(pk: PublicKey, x: int, F: int, H: int, rng=None,
                   rounds: int = DEFAULT_ROUNDS) -> bool:
    """Randomized check of one segment with ``rounds`` independent ``u`` draws.

    Each ``u_j`` is drawn from ``[1, p)``; ``u = 0`` would accept anything.
    """
    prm = pk.params
    limit = 1 << prm.L
    if not (0 <= F < limit and 0 <= H < limit):
        return False
    rng = rng if rng is not None else secrets.SystemRandom()
    p = prm.p
    U, V = embedded_coeffs(F, H, pk)
    ucols = column_values(U, x, p)
    vcols = column_values(V, x, p)
    for _ in range(rounds):
        u = [1 + random_nat_below(p - 1, rng) for _ in range(prm.m)]
        left = sum(a * b for a, b in zip(vcols, u)) % p
        right = sum(a * b for a, b in zip(ucols, u)) % p
        if left != right:
            return False
    return True


def verify(pk: PublicKey, message: bytes, sig, rng=None,
           rounds: int = DEFAULT_ROUNDS) -> bool:
    """Check every segment of ``sig`` against ``hash(message)``."""
    if sig.params != pk.params:
        raise MalformedSignature("signature parameters do not match the public key")
    xs = hash_to_segments(message, pk.params)
    if len(xs) != len(sig.pairs):
        raise MalformedSignature(f"expected {len(xs)} segments, got {len(sig.pairs)}")
    rng = rng if rng is not None else secrets.SystemRandom()
    return all(verify_segment(pk, x, F, H, rng, rounds)
               for x, (F, H) in zip(xs, sig.pairs))
