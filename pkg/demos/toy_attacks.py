"""Break a small key two ways: recover the hidden rings, then forge.

Run: python demos/toy_attacks.py
"""

import random

from hppkds.cryptanalysis import forgery_search, recover_hidden_rings, recover_signing_ratio
from hppkds.keygen import generate_keypair
from hppkds.params import custom_params, hash_to_segments
from hppkds.signer import sign, sign_segment
from hppkds.verifier import verify

rng = random.Random(11)
prm = custom_params(13, 1, 1, 2, 14, 38)
sk, pk = generate_keypair(prm, rng)
print(f"secret rings: S1={sk.S1}, S2={sk.S2}")

rec = recover_hidden_rings(pk, 1 << 13, 1 << 14)
print(f"recovered:    S1={rec.s1_candidates}, S2={rec.s2_candidates} "
      f"after {rec.work} candidate checks")

triples, seen = [], set()
msg = b"one intercepted message"
for x, (F, H) in zip(hash_to_segments(msg, prm), sign(sk, pk, msg, rng).pairs):
    if x not in seen:
        seen.add(x)
        triples.append((x, F, H))
key = recover_signing_ratio(pk, rec.s1_candidates[0], rec.s2_candidates[0], triples, rng)
print(f"f ~ {key.f.coeffs}, h ~ {key.h.coeffs} (true {sk.f.coeffs}, {sk.h.coeffs})")

forged = sign(key.private_key, pk, b"never signed by the owner", rng)
print("forged signature verifies:", verify(pk, b"never signed by the owner", forged, rng))

# direct search for accepted (F, H) pairs at one point, no key recovery
x = 4
genuine = [sign_segment(sk, x, a) for a in range(1, 13)]
report = forgery_search(pk, x, budget=200_000, rng=rng, genuine=genuine)
print()
print("\n".join(report.lines()))
