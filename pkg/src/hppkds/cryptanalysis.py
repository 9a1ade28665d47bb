"""Desk-scale security experiments.

* ``barrett_tail_experiment``: how often the Barrett floor quotient falls one
  short, as a function of the margin ``delta = k - bit_length(n)``.
* ``recover_hidden_rings``: exhaustive scan for ``S1``/``S2`` that inverts the
  public ``mu``/``nu`` grids.
* ``recover_signing_ratio``: with the rings in hand, rebuild a working signing
  key from intercepted signatures.
* ``forgery_search``: guess ``(F', H')`` pairs and count which pass.

Everything here is meant for toy parameters; the scans are exponential in L.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .bigmod import ceil_div, mod_inverse, random_nat_below
from .errors import BudgetExceeded, DegenerateSystem, HppkError, InsufficientSignatures
from .keygen import PrivateKey, PublicKey
from .polyring import FieldPoly
from .signer import sign
from .verifier import column_values, embedded_coeffs, verify

__all__ = [
    "AttackReport",
    "CHUNK",
    "MAX_RING_SCAN",
    "RecoveredKey",
    "RingRecovery",
    "barrett_tail_experiment",
    "forgery_search",
    "nullspace_mod_p",
    "recover_hidden_rings",
    "recover_signing_ratio",
    "ring_candidate_ok",
]

MAX_RING_SCAN = 1 << 24
MAX_FORGERY_BITS = 30
CHUNK = 1 << 15


# -- Barrett tail experiment -------------------------------------------------

def _tail_chunk(args) -> int:
    bits, delta, trials, seed = args
    rng = random.Random(seed)
    k = bits + delta
    top = 1 << (bits - 1)
    tail = 0
    for _ in range(trials):
        n = top | rng.getrandbits(bits - 1)
        a = random_nat_below(n, rng)
        b = random_nat_below(n, rng)
        mu = (b << k) // n
        if a * b - n * ((a * mu) >> k) >= n:
            tail += 1
    return tail


def barrett_tail_experiment(bits: int, delta: int, trials: int, seed=0,
                            workers: int = 1) -> int:
    """Count Barrett results in ``[n, 2n)`` over ``trials`` random draws.

    Each trial draws a fresh modulus ``n`` of exactly ``bits`` bits and
    operands ``a, b`` uniform in ``[0, n)``, with ``k = bits + delta``.
    Trials are cut into fixed chunks with their own derived seed, so the count
    depends only on ``(bits, delta, trials, seed)`` and not on ``workers``.
    """
    if bits < 8:
        raise ValueError("bits must be >= 8")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if delta < 0:
        raise ValueError("delta must be >= 0")
    jobs = []
    for c, start in enumerate(range(0, trials, CHUNK)):
        size = min(CHUNK, trials - start)
        jobs.append((bits, delta, size, f"barrett:{seed}:{bits}:{delta}:{c}"))
    if workers <= 1 or len(jobs) == 1:
        return sum(map(_tail_chunk, jobs))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_tail_chunk, jobs))


# -- hidden-ring recovery ----------------------------------------------------

@dataclass
class RingRecovery:
    s1_candidates: list[int]
    s2_candidates: list[int]
    work: int           # candidate moduli examined, both rings together
    elapsed: float = 0.0


def ring_candidate_ok(S: int, s: int, scaled, barrett, p: int, k: int,
                      check_floor: bool = True) -> bool:
    """Does modulus ``S`` explain the public ``(s, scaled, barrett)`` triple?

    Inverts ``mu = floor(2**k P / S)`` as ``P = ceil(S mu / 2**k)``, derives
    the scaling ``beta = s / S mod p`` and requires ``beta * P == p' (mod p)``
    for every coefficient.  With ``check_floor`` the candidate must also
    reproduce ``mu`` exactly from ``P``.
    """
    Sp = S % p
    if Sp == 0:
        return False
    beta = s * pow(Sp, -1, p) % p
    for row_c, row_b in zip(scaled, barrett):
        for c, mu in zip(row_c, row_b):
            P = ceil_div(S * mu, 1 << k)
            if P >= S or beta * P % p != c:
                return False
            if check_floor and (P << k) // S != mu:
                return False
    return True


def recover_hidden_rings(pk: PublicKey, search_lo: int, search_hi: int, *,
                         force: bool = False, check_floor: bool = True) -> RingRecovery:
    """Scan ``S`` over ``[search_lo, search_hi)`` for both hidden rings."""
    span = search_hi - search_lo
    if span < 0:
        raise ValueError("empty search interval")
    if span > MAX_RING_SCAN and not force:
        raise BudgetExceeded(f"range of {span} candidates exceeds {MAX_RING_SCAN}")
    prm = pk.params
    p, k = prm.p, prm.k
    t0 = time.perf_counter()
    s1c, s2c = [], []
    for S in range(max(search_lo, 2), search_hi):
        if ring_candidate_ok(S, pk.s1, pk.p_grid.rows, pk.mu, p, k, check_floor):
            s1c.append(S)
        if ring_candidate_ok(S, pk.s2, pk.q_grid.rows, pk.nu, p, k, check_floor):
            s2c.append(S)
    return RingRecovery(s1c, s2c, 2 * span, time.perf_counter() - t0)


# -- signing-key reconstruction ----------------------------------------------

def nullspace_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of ``{v : A v = 0 (mod p)}`` by Gauss-Jordan elimination."""
    A = [[v % p for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [v * inv % p for v in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                fac = A[i][c]
                A[i] = [(a - fac * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][free] % p
        basis.append(v)
    return basis


def _congruence_solutions(v: int, c: int, S: int) -> list[int]:
    """All ``r`` in ``[0, S)`` with ``r v = c (mod S)``."""
    g = gcd(v, S)
    if c % g:
        return []
    step = S // g
    base = (c // g) * mod_inverse(v // g % step, step) % step if step > 1 else 0
    return [base + t * step for t in range(g)]


def _multiplier_candidates(hidden: list[int], S: int, elems: Iterable[int], p: int) -> list[int]:
    """Ring multipliers ``R`` with ``R^-1 P < p`` for all P and ``R e < p`` for all e."""
    # anchor on the nonzero coefficient sharing the least with S
    nonzero = [v for v in hidden if v]
    if not nonzero:
        raise DegenerateSystem("all encrypted coefficients are zero")
    anchor = min(nonzero, key=lambda v: gcd(v, S))
    elems = list(elems)
    out = set()
    for plain in range(1, p):
        for r_inv in _congruence_solutions(anchor, plain, S):
            if gcd(r_inv, S) != 1:
                continue
            if any(r_inv * v % S >= p for v in hidden):
                continue
            R = mod_inverse(r_inv, S)
            if all(R * e % S < p for e in elems):
                out.add(R)
    return sorted(out)


@dataclass
class RecoveredKey:
    f: FieldPoly
    h: FieldPoly
    private_key: PrivateKey
    validated: bool


def _normalize(vec: list[int], p: int) -> list[int]:
    lead = next(v for v in vec if v)
    inv = pow(lead, -1, p)
    return [v * inv % p for v in vec]


def recover_signing_ratio(pk: PublicKey, S1: int, S2: int,
                          signatures: Sequence[tuple[int, int, int]],
                          rng=None, probe: bytes = b"forged-by-key-recovery") -> RecoveredKey:
    """Rebuild ``(f, h)`` up to a common scalar, plus ring multipliers.

    ``signatures`` holds intercepted ``(x, F, H)`` triples.  Each one yields
    ``c_H = alpha h(x) mod p`` and ``c_F = alpha f(x) mod p`` once the ring
    multipliers are known, hence one linear constraint
    ``c_F h(x) - c_H f(x) = 0`` on the unknown coefficients.  ``2*lambda + 1``
    independent constraints pin ``(f, h)`` down to a scalar.

    The result is checked by signing ``probe`` and running public verification.
    """
    prm = pk.params
    p, k, lam = prm.p, prm.k, prm.lam
    need = 2 * lam + 1
    if len(signatures) < need:
        raise InsufficientSignatures(f"need at least {need} signatures, got {len(signatures)}")
    rng = rng if rng is not None else random.Random(0)

    P = [ceil_div(S1 * mu, 1 << k) for row in pk.mu for mu in row]
    Q = [ceil_div(S2 * nu, 1 << k) for row in pk.nu for nu in row]
    R1s = _multiplier_candidates(P, S1, (H for _, _, H in signatures), p)
    R2s = _multiplier_candidates(Q, S2, (F for _, F, _ in signatures), p)
    if not R1s or not R2s:
        raise DegenerateSystem("no ring multiplier consistent with the signatures")

    best = None
    for R1 in R1s:
        for R2 in R2s:
            rows = []
            for x, F, H in signatures:
                cH = R1 * H % S1
                cF = R2 * F % S2
                powers = [pow(x, s, p) for s in range(lam + 1)]
                rows.append([-cH * v for v in powers] + [cF * v for v in powers])
            basis = nullspace_mod_p(rows, 2 * (lam + 1), p)
            if len(basis) != 1:
                continue
            vec = _normalize(basis[0], p)
            f = FieldPoly(p, tuple(vec[:lam + 1]))
            h = FieldPoly(p, tuple(vec[lam + 1:]))
            try:
                forged = PrivateKey(prm, f, h, R1, S1, R2, S2)
                sig = sign(forged, pk, probe, rng)
                ok = verify(pk, probe, sig, rng)
            except HppkError:
                continue
            best = RecoveredKey(f, h, forged, ok)
            if ok:
                return best
    if best is None:
        raise DegenerateSystem("signature constraints do not determine (f, h) up to scale")
    return best


# -- forgery search ----------------------------------------------------------

@dataclass
class AttackReport:
    mode: str
    candidates: list = field(default_factory=list)
    work: int = 0
    budget: int = 0
    success: bool = False
    notes: str = ""
    elapsed: float = 0.0
    on_orbit: list[bool] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"mode: {self.mode}",
               f"success: {self.success}",
               f"work: {self.work}",
               f"budget: {self.budget}",
               f"candidates: {len(self.candidates)}",
               f"elapsed: {self.elapsed:.3f}s"]
        if self.on_orbit:
            out.append(f"off_orbit: {self.on_orbit.count(False)}")
        if self.notes:
            out.append(f"notes: {self.notes}")
        return out


def forgery_search(pk: PublicKey, x: int, budget: int, rng=None, *,
                   bound: int | None = None, genuine: Iterable[tuple[int, int]] = (),
                   force: bool = False) -> AttackReport:
    """Look for ``(F', H')`` in ``[1, bound)**2`` that pass verification at ``x``.

    Acceptance is tested against every possible ``u`` (column-wise equality).
    If ``budget`` covers the whole square the search is exhaustive, done as a
    join on per-element column vectors; otherwise ``budget`` pairs are sampled.
    ``genuine`` is an optional set of known valid pairs (the alpha-orbit);
    ``success`` means some accepted pair lies outside it.
    """
    prm = pk.params
    bound = (1 << prm.L) if bound is None else bound
    if 2 * (bound - 1).bit_length() > MAX_FORGERY_BITS and not force:
        raise BudgetExceeded(f"search square of {bound - 1}^2 pairs is beyond desk scale")
    genuine = set(genuine)
    space = (bound - 1) ** 2
    report = AttackReport("forgery", budget=budget)
    t0 = time.perf_counter()
    if budget <= 0 or space <= 0:
        report.notes = "empty budget"
        return report
    p = prm.p
    if budget >= space:
        by_h = defaultdict(list)
        for H in range(1, bound):
            U, _ = embedded_coeffs(0, H, pk)
            by_h[column_values(U, x, p)].append(H)
        accepted = []
        for F in range(1, bound):
            _, V = embedded_coeffs(F, 0, pk)
            for H in by_h.get(column_values(V, x, p), ()):
                accepted.append((F, H))
        report.work = space
        report.notes = "exhaustive"
    else:
        rng = rng if rng is not None else random.Random(0)
        u_cache, v_cache = {}, {}
        accepted = []
        for _ in range(budget):
            F = 1 + random_nat_below(bound - 1, rng)
            H = 1 + random_nat_below(bound - 1, rng)
            if H not in u_cache:
                u_cache[H] = column_values(embedded_coeffs(0, H, pk)[0], x, p)
            if F not in v_cache:
                v_cache[F] = column_values(embedded_coeffs(F, 0, pk)[1], x, p)
            if u_cache[H] == v_cache[F]:
                accepted.append((F, H))
        report.work = budget
        report.notes = "sampled"
    report.candidates = accepted
    report.on_orbit = [pair in genuine for pair in accepted]
    report.success = any(not o for o in report.on_orbit)
    report.elapsed = time.perf_counter() - t0
    return report
