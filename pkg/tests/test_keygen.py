import random
from itertools import product
from math import ceil, gcd

import pytest
from sympy import isprime

from hppkds.bigmod import mod_inverse
from hppkds.codec import encode_private, encode_public
from hppkds.errors import DimensionMismatch, InvalidParameters, UnknownLevel
from hppkds.keygen import (PrivateKey, decrypt_coeff, derive_public, encrypt_coeff,
                           generate_keypair, hidden_coeffs, random_base)
from hppkds.params import custom_params, standard_params
from hppkds.polyring import BaseGrid, FieldPoly, poly_eval, product_coeffs
from hppkds.signer import sign
from hppkds.verifier import verify

from conftest import make_toy, random_toy_params


@pytest.mark.parametrize("level, p, L, k, alg", [
    ("I", 2**64 - 59, 144, 176, "sha256"),
    ("III", 2**96 - 17, 208, 240, "sha384"),
    ("V", 2**128 - 159, 272, 304, "sha512"),
])
def test_standard_params(level, p, L, k, alg):
    prm = standard_params(level)
    assert (prm.p, prm.n, prm.lam, prm.m, prm.L, prm.k, prm.hash_alg) == (p, 1, 1, 1, L, k, alg)
    assert isprime(prm.p)
    assert prm.L == 2 * prm.p_bits + 16 and prm.k == prm.L + 32


def test_unknown_level():
    with pytest.raises(UnknownLevel):
        standard_params("II")


def test_custom_params_validation():
    with pytest.raises(InvalidParameters):
        custom_params(15, 1, 1, 1, 13, 24)
    with pytest.raises(InvalidParameters):
        custom_params(13, 1, 1, 1, 8, 24)      # S could be below p**2
    with pytest.raises(InvalidParameters):
        custom_params(13, 1, 1, 1, 13, 12)     # k < L


@pytest.mark.parametrize("c, R, S, out", [(6, 4267, 6797, 5211), (2, 6475, 7123, 5827)])
def test_encrypt_coeff(c, R, S, out):
    assert encrypt_coeff(c, R, S) == out
    assert decrypt_coeff(out, R, S) == c
    assert encrypt_coeff(c, 1, S) == c


def test_toy_public_key(toy):
    _, pk, _ = toy
    assert (pk.s1, pk.s2) == (11, 12)
    assert pk.p_grid.column(1) == (11, 11, 6) and pk.p_grid.column(2) == (3, 6, 8)
    assert pk.q_grid.column(1) == (3, 4, 6) and pk.q_grid.column(2) == (7, 3, 9)
    col = lambda rows, j: tuple(r[j - 1] for r in rows)
    assert col(pk.mu, 1) == (12862449, 10905066, 15192550)
    assert col(pk.mu, 2) == (6617583, 15192550, 372717)
    assert col(pk.nu, 1) == (13724671, 3040767, 1514495)
    assert col(pk.nu, 2) == (16765439, 13724671, 15239167)


def test_toy_hidden_coefficients(toy):
    sk, _, base = toy
    P, Q = hidden_coeffs(sk, base)
    assert [r[0] for r in P] == [5211, 4418, 6155] and [r[1] for r in P] == [2681, 6155, 151]
    assert [r[0] for r in Q] == [5827, 1291, 643] and [r[1] for r in Q] == [7118, 5827, 6470]


def test_trivial_rings_give_plain_coefficients():
    prm = custom_params(13, 1, 1, 2, 13, 24)
    sk = PrivateKey(prm, FieldPoly(13, (4, 9)), FieldPoly(13, (10, 7)), 1, 6797, 1, 7123)
    base = BaseGrid.from_columns(13, [(8, 7), (5, 11)])
    pk = derive_public(sk, base, 1)
    assert pk.p_grid.rows == product_coeffs(sk.f, base).rows
    assert pk.q_grid.rows == product_coeffs(sk.h, base).rows


def test_dimension_mismatch(toy):
    sk, _, _ = toy
    with pytest.raises(DimensionMismatch):
        derive_public(sk, BaseGrid.from_columns(13, [(8, 7)]), 1)


def test_barrett_grid_floor_definition(level_keys):
    # mu * S1 <= 2**k * P < (mu + 1) * S1, checked with independently derived P
    rng = random.Random(8)
    for lvl in ("I", "III", "V"):
        prm = standard_params(lvl)
        sk, _ = level_keys[lvl]
        base = random_base(prm, rng)
        pk = derive_public(sk, base, 1 + rng.randrange(prm.p - 1))
        pg = product_coeffs(sk.f, base)
        for i, j in product(range(prm.rows), range(1, prm.m + 1)):
            P = sk.R1 * pg.entry(i, j) % sk.S1
            mu = pk.mu[i][j - 1]
            assert mu * sk.S1 <= 2**prm.k * P < (mu + 1) * sk.S1


def test_generated_key_invariants(level_keys):
    for lvl, (sk, pk) in level_keys.items():
        prm = sk.params
        for R, S in ((sk.R1, sk.S1), (sk.R2, sk.S2)):
            assert 2 ** (prm.L - 1) <= S < 2**prm.L
            assert gcd(R, S) == 1 and 1 <= R < S
            assert S % prm.p and S > prm.p**2
        assert sk.f.degree == sk.h.degree == prm.lam
        assert all(c for c in sk.f.coeffs + sk.h.coeffs)
        assert pk.p_grid.shape == pk.q_grid.shape == (prm.rows, prm.m)
        assert all(v < 2**prm.k for r in pk.mu + pk.nu for v in r)


def test_beta_consistency():
    rng = random.Random(12)
    for lvl in ("I", "III", "V"):
        prm = standard_params(lvl)
        sk = generate_keypair(prm, rng)[0]
        base, beta = random_base(prm, rng), 1 + rng.randrange(prm.p - 1)
        pk = derive_public(sk, base, beta)
        assert pk.s1 == beta * sk.S1 % prm.p
        for i in range(prm.rows):
            for j in range(prm.m):
                P = -((-sk.S1 * pk.mu[i][j]) >> prm.k)
                assert pk.p_grid.rows[i][j] == beta * P % prm.p
                Q = -((-sk.S2 * pk.nu[i][j]) >> prm.k)
                assert pk.q_grid.rows[i][j] == beta * Q % prm.p


def test_deterministic_generation():
    prm = standard_params("I")
    a = generate_keypair(prm, random.Random(42))
    b = generate_keypair(prm, random.Random(42))
    assert encode_public(a[1]) == encode_public(b[1])
    assert encode_private(a[0]) == encode_private(b[0])
    assert len(encode_public(a[1])) - 7 == 196


def test_beta_one_flag():
    prm = standard_params("I")
    sk, pk = generate_keypair(prm, random.Random(3), beta=1)
    assert pk.s1 == sk.S1 % prm.p


def test_generated_pair_round_trips(level_keys):
    rng = random.Random(1)
    for sk, pk in level_keys.values():
        sig = sign(sk, pk, b"round trip", rng)
        assert verify(pk, b"round trip", sig, rng)


def test_f_h_never_proportional():
    rng = random.Random(0)
    for _ in range(200):
        prm = random_toy_params(rng)
        sk, _ = generate_keypair(prm, rng)
        f, h = sk.f.coeffs, sk.h.coeffs
        assert (f[0] * h[1] - f[1] * h[0]) % 13


def test_exactness_chain_exhaustive(toy):
    # [H * P_ij mod S1] mod p == (alpha h(x) mod p) * p_ij mod p for all x, alpha
    sk, _, base = toy
    P, _ = hidden_coeffs(sk, base)
    pg = product_coeffs(sk.f, base)
    for x in range(13):
        for alpha in range(1, 13):
            c = alpha * poly_eval(sk.h, x) % 13
            H = mod_inverse(sk.R1, sk.S1) * c % sk.S1
            for i in range(3):
                for j in range(2):
                    assert H * P[i][j] % sk.S1 % 13 == c * pg.rows[i][j] % 13


def test_operator_unitarity():
    rng = random.Random(21)
    done = 0
    while done < 10_000:
        S = rng.getrandbits(rng.randint(8, 272)) | 3
        R = rng.randrange(1, S)
        if gcd(R, S) != 1:
            continue
        c = rng.randrange(S)
        assert mod_inverse(R, S) * encrypt_coeff(c, R, S) % S == c
        done += 1


def test_operator_non_commutativity_witness():
    # E_(R,S) then E_(R',S') differs from the opposite order
    R, S, R2, S2, c = 3, 7, 2, 5, 4
    one = R2 * (R * c % S) % S2
    other = R * (R2 * c % S2) % S
    assert (one, other) == (0, 2)
    assert one != other
