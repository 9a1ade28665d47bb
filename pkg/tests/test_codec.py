import random

import pytest
from hypothesis import given, settings, strategies as st

from hppkds import codec
from hppkds.errors import BadKind, BadLength, BadMagic, CodecError, UnknownVersion
from hppkds.keygen import generate_keypair
from hppkds.params import custom_params, hash_to_segments, standard_params
from hppkds.signer import Signature, sign, sign_segment

SIZES = {"I": (196, 104, 144), "III": (276, 152, 208), "V": (356, 200, 272)}


@pytest.mark.parametrize("level", SIZES)
def test_payload_sizes(level, level_keys):
    sk, pk = level_keys[level]
    sig = sign(sk, pk, b"size", random.Random(0))
    got = tuple(len(b) - codec.HEADER_SIZE for b in (
        codec.encode_public(pk), codec.encode_private(sk), codec.encode_signature(sig)))
    assert got == SIZES[level]
    prm = standard_params(level)
    assert (prm.public_key_size, prm.private_key_size, prm.signature_size) == SIZES[level]


def test_level_one_breakdown():
    prm = standard_params("I")
    assert prm.public_key_size == 2 * 8 + 2 * 1 * 3 * 8 + 2 * 1 * 3 * 22
    assert prm.private_key_size == 2 * 2 * 8 + 4 * 18
    assert prm.signature_size == 2 * 18 * 4


@pytest.mark.parametrize("level", SIZES)
def test_round_trip(level):
    rng = random.Random(hash(level) & 0xFFFF)
    prm = standard_params(level)
    for _ in range(5):
        sk, pk = generate_keypair(prm, rng)
        assert codec.decode_public(codec.encode_public(pk)) == pk
        assert codec.decode_private(codec.encode_private(sk)) == sk
        sig = sign(sk, pk, rng.randbytes(20), rng)
        assert codec.decode_signature(codec.encode_signature(sig)) == sig


def test_toy_round_trip(toy):
    sk, pk, _ = toy
    blob = codec.encode_public(pk)
    assert blob[6] == 0          # custom level code, parameters inline
    assert codec.decode_public(blob) == pk
    assert codec.decode_private(codec.encode_private(sk)) == sk
    sig = sign(sk, pk, b"toy", random.Random(1))
    assert codec.decode_signature(codec.encode_signature(sig)) == sig


def test_length_off_by_one(level_keys):
    sk, pk = level_keys["I"]
    sig = sign(sk, pk, b"x", random.Random(0))
    for blob, dec in ((codec.encode_public(pk), codec.decode_public),
                      (codec.encode_private(sk), codec.decode_private),
                      (codec.encode_signature(sig), codec.decode_signature)):
        with pytest.raises(BadLength):
            dec(blob[:-1])
        with pytest.raises(BadLength):
            dec(blob + b"\0")


def test_header_errors(level_keys):
    _, pk = level_keys["I"]
    blob = codec.encode_public(pk)
    with pytest.raises(BadMagic):
        codec.decode_public(b"XXXX" + blob[4:])
    with pytest.raises(UnknownVersion):
        codec.decode_public(blob[:4] + b"\x02" + blob[5:])
    with pytest.raises(BadKind):
        codec.decode_private(blob)
    with pytest.raises(BadLength):
        codec.decode_public(blob[:3])
    with pytest.raises(CodecError):
        codec.decode_public(blob[:6] + b"\x09" + blob[7:])


def test_unreduced_field_element_rejected(level_keys):
    _, pk = level_keys["I"]
    blob = bytearray(codec.encode_public(pk))
    blob[7:15] = b"\xff" * 8     # s1 >= p
    with pytest.raises(CodecError):
        codec.decode_public(bytes(blob))


SMALL_PRIMES = [13, 17, 257, 65537, 2**31 - 1]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_PRIMES), st.integers(0, 3), st.integers(0, 3), st.integers(1, 3),
       st.integers(0, 20), st.integers(0, 40), st.sampled_from(["sha256", "sha384", "sha512"]),
       st.integers(0, 2**32))
def test_sizes_match_closed_forms(p, n, lam, m, extra_l, extra_k, alg, seed):
    L = 2 * p.bit_length() + 1 + extra_l
    prm = custom_params(p, n, lam, m, L, L + extra_k, alg)
    rng = random.Random(seed)
    sk, pk = generate_keypair(prm, rng)
    pb, lb, rb = -(-p.bit_length() // 8), -(-L // 8), -(-(L + extra_k) // 8)
    inline = 7 + 10 + pb
    segs = -(-prm.digest_bits // p.bit_length())
    assert len(codec.encode_public(pk)) - inline == 2 * m * (n + lam + 1) * (rb + pb) + 2 * pb
    assert len(codec.encode_private(sk)) - inline == 2 * (lam + 1) * pb + 4 * lb
    xs = hash_to_segments(b"m", prm)
    sig = Signature(prm, tuple(sign_segment(sk, x, 1 + rng.randrange(p - 1)) for x in xs))
    assert len(codec.encode_signature(sig)) - inline == 2 * lb * segs
    assert codec.decode_public(codec.encode_public(pk)) == pk
    assert codec.decode_private(codec.encode_private(sk)) == sk
    assert codec.decode_signature(codec.encode_signature(sig)) == sig
