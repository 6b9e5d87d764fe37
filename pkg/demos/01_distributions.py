"""Mahonian and bimahonian distributions, computed three ways.

The fake-degree sum, the flag-major-index sum over the group, and the
Molien-type average over the group all give the same polynomial.
"""

from bimahonian import bimahonian_fake, bimahonian_fmaj, bimahonian_molien, mahonian

# W(q) for the hyperoctahedral group B_3 = G(2,1,3)
print("W(q) for G(2,1,3):", mahonian(2, 3))

for d, n, s in [(1, 3, 1), (3, 2, 1), (3, 2, 2), (4, 2, 3)]:
    a = bimahonian_fake(d, n, s)
    b = bimahonian_fmaj(d, n, s)
    c = bimahonian_molien(d, n, s)
    print(f"G({d},1,{n}), s={s}: methods agree: {a == b == c}")
    print("   ", c)

# the cyclic group of order 5: exponents (a, b) with a + s b = 0 mod 5
for s in (1, 2, 4):
    print(f"Z/5, s={s}:", bimahonian_molien(5, 1, s))

# specializing one variable to 1 recovers W(q)
P = bimahonian_molien(3, 2, 2)
print("W^sigma(1, q) == W(q):", P.specialize(t=1) == mahonian(3, 2))
