"""Regular elements and their certificates.

An element is regular when it has an eigenvector lying on no reflecting
hyperplane.  In S_n these are exactly the powers of n-cycles and
(n-1)-cycles.
"""

from collections import Counter

from bimahonian import WreathElem, is_regular
from bimahonian.characters import cycle_type
from bimahonian.sieving import hyperplanes, regular_elements

c = WreathElem(1, (2, 3, 4, 5, 1), (0,) * 5)
for cert in is_regular(c):
    print("eigenvalue", cert.eigenvalue, "order", cert.order, "valid:", cert.check())

print("transposition in S_4 regular?", bool(is_regular(WreathElem(1, (2, 1, 3, 4), (0,) * 4))))
print("(12)(34) in S_4 regular?", bool(is_regular(WreathElem(1, (2, 1, 4, 3), (0,) * 4))))

for n in range(2, 6):
    types = Counter(cycle_type(w.perm) for w, _ in regular_elements(1, n))
    print(f"S_{n} regular cycle types:", dict(types))

H = hyperplanes(3, 2)
print("G(3,1,2): hyperplanes", len(H), "reflections", sum(H.values()))
print("regular elements of G(3,1,2):", len(regular_elements(3, 2)))
