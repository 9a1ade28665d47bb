"""Signing: per-segment (F, H) pairs with alpha randomization and self-check."""

from __future__ import annotations

import secrets
from dataclasses import dataclass

from .bigmod import random_nat_below
from .errors import DimensionMismatch, InvalidRange, MalformedSignature, RetryExhausted
from .keygen import PrivateKey, PublicKey
from .params import ParameterSet, hash_to_segments
from .polyring import poly_eval
from .verifier import columns_match

__all__ = ["MAX_ATTEMPTS", "Signature", "hash_to_segments", "sign", "sign_point",
           "sign_segment"]

MAX_ATTEMPTS = 64


@dataclass(frozen=True)
class Signature:
    params: ParameterSet
    pairs: tuple[tuple[int, int], ...]   # (F_t, H_t) per segment

    def __post_init__(self):
        limit = 1 << self.params.L
        pairs = tuple((int(F), int(H)) for F, H in self.pairs)
        if any(not (0 <= F < limit and 0 <= H < limit) for F, H in pairs):
            raise MalformedSignature("signature element wider than L bits")
        object.__setattr__(self, "pairs", pairs)


def sign_segment(sk: PrivateKey, x: int, alpha: int) -> tuple[int, int]:
    """``F = R2^-1 (alpha f(x) mod p) mod S2``, ``H = R1^-1 (alpha h(x) mod p) mod S1``."""
    p = sk.params.p
    if not 0 <= x < p:
        raise InvalidRange("x must lie in [0, p)")
    if not 1 <= alpha < p:
        raise InvalidRange("alpha must lie in [1, p)")
    F = sk.R2_inv * (alpha * poly_eval(sk.f, x) % p) % sk.S2
    H = sk.R1_inv * (alpha * poly_eval(sk.h, x) % p) % sk.S1
    return F, H


def sign_point(sk: PrivateKey, pk: PublicKey, x: int, rng,
               max_attempts: int = MAX_ATTEMPTS) -> tuple[int, int, int]:
    """Sign one field element; returns ``(F, H, attempts)``.

    A candidate is accepted only if the public check holds column by column,
    i.e. for every possible verifier draw.  A Barrett quotient falling one
    short on any coefficient breaks that, and a fresh alpha is drawn.
    """
    p = sk.params.p
    for attempt in range(1, max_attempts + 1):
        alpha = 1 + random_nat_below(p - 1, rng)
        F, H = sign_segment(sk, x, alpha)
        if columns_match(pk, x, F, H):
            return F, H, attempt
    raise RetryExhausted(f"no valid alpha for x={x} after {max_attempts} draws")


def sign(sk: PrivateKey, pk: PublicKey, message: bytes, rng=None,
         max_attempts: int = MAX_ATTEMPTS) -> Signature:
    if sk.params != pk.params:
        raise DimensionMismatch("private and public key parameters differ")
    rng = rng if rng is not None else secrets.SystemRandom()
    pairs = []
    for x in hash_to_segments(message, sk.params):
        F, H, _ = sign_point(sk, pk, x, rng, max_attempts)
        pairs.append((F, H))
    return Signature(sk.params, tuple(pairs))
