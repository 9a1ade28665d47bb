"""Walk through the p = 13 toy key: public values, one signature, its check.

Run: python demos/toy_walkthrough.py
"""

from itertools import product

from hppkds.keygen import PrivateKey, derive_public, hidden_coeffs
from hppkds.params import toy_params
from hppkds.polyring import BaseGrid, FieldPoly
from hppkds.signer import sign_segment
from hppkds.verifier import embedded_coeffs, transcript

prm = toy_params()
sk = PrivateKey(prm, FieldPoly(13, (4, 9)), FieldPoly(13, (10, 7)),
                R1=4267, S1=6797, R2=6475, S2=7123)
base = BaseGrid.from_columns(13, [(8, 7), (5, 11)])
pk = derive_public(sk, base, beta=1)

print("f =", sk.f.coeffs, " h =", sk.h.coeffs)
P, Q = hidden_coeffs(sk, base)
print("hidden P (mod S1):", P)
print("hidden Q (mod S2):", Q)
print("public p':", pk.p_grid.rows, " q':", pk.q_grid.rows)
print("public mu:", pk.mu)
print("public nu:", pk.nu)

x = 9
F, H = sign_segment(sk, x, alpha=1)
print(f"\nsignature on x={x}: F={F}, H={H}")
U, V = embedded_coeffs(F, H, pk)
print("U:", U, "\nV:", V)

passes = sum(transcript(pk, x, F, H, u).passed for u in product(range(13), repeat=2))
print(f"check holds for {passes}/169 noise choices")

# x = 10 is a root of the difference in column 1 only
t = [transcript(pk, 10, F, H, u).passed for u in product(range(13), repeat=2)]
print(f"same pair at x=10 passes {sum(t)}/169 noise choices")
