"""Key material: private/public key types, coefficient encryption, key generation."""

from __future__ import annotations

import secrets
from dataclasses import dataclass, replace
from math import gcd
from typing import Sequence

from .bigmod import barrett_mu, mod_inverse, random_nat_below
from .errors import DimensionMismatch, InvalidParameters, RngFailure
from .params import ParameterSet
from .polyring import BaseGrid, CoeffGrid, FieldPoly, product_coeffs

__all__ = [
    "PrivateKey",
    "PublicKey",
    "decrypt_coeff",
    "derive_public",
    "encrypt_coeff",
    "generate_keypair",
    "hidden_coeffs",
    "random_base",
]

_MAX_RESAMPLE = 10_000

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PrivateKey:
    params: ParameterSet
    f: FieldPoly
    h: FieldPoly
    R1: int
    S1: int
    R2: int
    S2: int

    def __post_init__(self):
        for R, S in ((self.R1, self.S1), (self.R2, self.S2)):
            if not 1 <= R < S:
                raise InvalidParameters("ring multiplier must lie in [1, S)")
            if gcd(R, S) != 1:
                raise InvalidParameters("ring multiplier not invertible")
        if self.f.p != self.params.p or self.h.p != self.params.p:
            raise InvalidParameters("f, h must live over the parameter field")

    @property
    def R1_inv(self) -> int:
        return mod_inverse(self.R1, self.S1)

    @property
    def R2_inv(self) -> int:
        return mod_inverse(self.R2, self.S2)


@dataclass(frozen=True)
class PublicKey:
    """``s1, s2``, the beta-scaled grids ``p', q'`` and Barrett grids ``mu, nu``.

    ``mu[i][j-1]`` pairs with ``p_grid.entry(i, j)``; likewise ``nu`` with ``q_grid``.
    """

    params: ParameterSet
    s1: int
    s2: int
    p_grid: CoeffGrid
    q_grid: CoeffGrid
    mu: Rows
    nu: Rows

    def __post_init__(self):
        shape = (self.params.rows, self.params.m)
        for g in (self.p_grid, self.q_grid):
            if g.shape != shape:
                raise DimensionMismatch(f"grid shape {g.shape} != {shape}")
        limit = 1 << self.params.k
        for rows in (self.mu, self.nu):
            if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
                raise DimensionMismatch("Barrett grid shape mismatch")
            if any(not 0 <= v < limit for r in rows for v in r):
                raise InvalidParameters("Barrett parameter out of [0, 2**k)")

    def restrict_columns(self, columns: Sequence[int]) -> "PublicKey":
        """Keep only the noise variables ``u_j`` for ``j`` in ``columns`` (1-based)."""
        idx = [j - 1 for j in columns]

        def pick(rows):
            return tuple(tuple(r[c] for c in idx) for r in rows)

        params = replace(self.params, m=len(idx))
        if params.level != "custom":
            params = replace(params, level="custom")
        p = self.params.p
        return PublicKey(params, self.s1, self.s2,
                         CoeffGrid(p, pick(self.p_grid.rows)),
                         CoeffGrid(p, pick(self.q_grid.rows)),
                         pick(self.mu), pick(self.nu))


def encrypt_coeff(c: int, R: int, S: int) -> int:
    return R * c % S


def decrypt_coeff(c: int, R: int, S: int) -> int:
    return mod_inverse(R, S) * c % S


def hidden_coeffs(sk: PrivateKey, base: BaseGrid) -> tuple[Rows, Rows]:
    """Ring-encrypted product coefficients ``P_ij`` (mod S1) and ``Q_ij`` (mod S2)."""
    prm = sk.params
    if base.p != prm.p or base.shape != (prm.n + 1, prm.m):
        raise DimensionMismatch(f"base grid shape {base.shape} != {(prm.n + 1, prm.m)}")
    if sk.f.degree != prm.lam or sk.h.degree != prm.lam:
        raise DimensionMismatch("f and h must have degree lambda")
    pg = product_coeffs(sk.f, base)
    qg = product_coeffs(sk.h, base)
    P = tuple(tuple(encrypt_coeff(v, sk.R1, sk.S1) for v in row) for row in pg.rows)
    Q = tuple(tuple(encrypt_coeff(v, sk.R2, sk.S2) for v in row) for row in qg.rows)
    return P, Q


def derive_public(sk: PrivateKey, base: BaseGrid, beta: int) -> PublicKey:
    prm = sk.params
    p, k = prm.p, prm.k
    if not 1 <= beta < p:
        raise InvalidParameters("beta must lie in [1, p)")
    P, Q = hidden_coeffs(sk, base)
    return PublicKey(
        prm,
        s1=beta * sk.S1 % p,
        s2=beta * sk.S2 % p,
        p_grid=CoeffGrid(p, tuple(tuple(beta * v % p for v in row) for row in P)),
        q_grid=CoeffGrid(p, tuple(tuple(beta * v % p for v in row) for row in Q)),
        mu=tuple(tuple(barrett_mu(v, sk.S1, k) for v in row) for row in P),
        nu=tuple(tuple(barrett_mu(v, sk.S2, k) for v in row) for row in Q),
    )


def _nonzero(p, rng):
    return 1 + random_nat_below(p - 1, rng)


def _proportional(f: FieldPoly, h: FieldPoly) -> bool:
    p = f.p
    a, b = f.coeffs, h.coeffs
    return all((a[i] * b[j] - a[j] * b[i]) % p == 0
               for i in range(len(a)) for j in range(i + 1, len(a)))


def _hidden_ring(prm: ParameterSet, rng, content: int = 1) -> tuple[int, int]:
    # S coprime to the gcd of the plain coefficients: otherwise a rescaled
    # (S, P) pair reproduces the public key exactly
    top = 1 << (prm.L - 1)
    for _ in range(_MAX_RESAMPLE):
        S = top | random_nat_below(top, rng)
        if S % prm.p and gcd(S, content) == 1:
            break
    else:
        raise RngFailure("could not draw a hidden ring modulus")
    for _ in range(_MAX_RESAMPLE):
        R = 2 + random_nat_below(S - 2, rng)
        if gcd(R, S) == 1:
            return R, S
    raise RngFailure("could not draw an invertible ring multiplier")


def random_base(prm: ParameterSet, rng) -> BaseGrid:
    return BaseGrid(prm.p, tuple(tuple(_nonzero(prm.p, rng) for _ in range(prm.m))
                                 for _ in range(prm.n + 1)))


def generate_keypair(params: ParameterSet, rng=None, *, beta: int | None = None
                     ) -> tuple[PrivateKey, PublicKey]:
    """Sample a fresh key pair.

    ``rng`` defaults to the OS CSPRNG; pass a seeded ``random.Random`` for
    reproducible keys.  ``beta`` pins the public scaling factor (``beta=1``
    reproduces the worked example); by default it is uniform in ``[1, p)``.
    """
    rng = rng if rng is not None else secrets.SystemRandom()
    p = params.p
    for _ in range(_MAX_RESAMPLE):
        f = FieldPoly(p, tuple(_nonzero(p, rng) for _ in range(params.lam + 1)))
        h = FieldPoly(p, tuple(_nonzero(p, rng) for _ in range(params.lam + 1)))
        if params.lam == 0 or not _proportional(f, h):
            break
    else:
        raise RngFailure("could not draw non-proportional f, h")
    base = random_base(params, rng)
    R1, S1 = _hidden_ring(params, rng, gcd(*product_coeffs(f, base).flat()))
    R2, S2 = _hidden_ring(params, rng, gcd(*product_coeffs(h, base).flat()))
    if beta is None:
        beta = _nonzero(p, rng)
    sk = PrivateKey(params, f, h, R1, S1, R2, S2)
    return sk, derive_public(sk, base, beta)
