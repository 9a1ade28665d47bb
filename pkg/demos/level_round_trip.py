"""Generate, serialize, sign and verify at every standard level.

Run: python demos/level_round_trip.py
"""

import time

from hppkds import codec
from hppkds.keygen import generate_keypair
from hppkds.params import LEVELS, standard_params
from hppkds.signer import sign
from hppkds.verifier import verify

for level in LEVELS:
    prm = standard_params(level)
    sk, pk = generate_keypair(prm)
    pk_b, sk_b = codec.encode_public(pk), codec.encode_private(sk)
    pk, sk = codec.decode_public(pk_b), codec.decode_private(sk_b)

    t0 = time.perf_counter()
    sig = sign(sk, pk, b"hello")
    t1 = time.perf_counter()
    ok = verify(pk, b"hello", codec.decode_signature(codec.encode_signature(sig)))
    t2 = time.perf_counter()
    size = len(codec.encode_signature(sig)) - codec.HEADER_SIZE
    print(f"level {level:>3}: pk {len(pk_b) - 7} B, sk {len(sk_b) - 7} B, sig {size} B, "
          f"sign {1e3 * (t1 - t0):.2f} ms, verify {1e3 * (t2 - t1):.2f} ms, ok={ok}")
