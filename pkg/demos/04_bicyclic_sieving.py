"""Bicyclic sieving: polynomial values at roots of unity count fixed points.

The pair (c, c2) of regular elements acts on the group by
w -> c^(s i) w c2^(-j).  The bimahonian polynomial evaluated at
(omega^-i, omega2^-j) equals the number of fixed points of that action,
and its coefficients modulo (t^k - 1, q^l - 1) count orbits by stabilizer.
"""

from bimahonian import check_bicsp, make_instance, regular_cyclic_subgroups
from bimahonian.cyclotomic import GaloisAut
from bimahonian.sieving import group_exponent

d, n = 2, 2
subs = regular_cyclic_subgroups(d, n)
print(f"G({d},1,{n}) has {len(subs)} regular cyclic subgroups")
A, B = subs[-1], subs[-1]
sigma = GaloisAut(group_exponent(d, n), 1)
report = check_bicsp(make_instance(A.certificate, B.certificate, sigma))
print("c =", A.generator, " c2 =", B.generator, " k =", report.k, " l =", report.ell)
for i in range(report.k):
    print("  values:", [str(v) for v in report.evaluations[i]], " fixed points:", report.fixed_points[i])
print("orbit sizes:", sorted(o.size for o in report.orbits))
print("coefficient table:", report.a)
print("orbit counts:    ", report.orbit_counts)
print("both conditions hold:", report.passed)

# with a nontrivial automorphism on G(3,1,2)
d, n = 3, 2
m = group_exponent(d, n)
ok = True
for s in (1, 5):
    sigma = GaloisAut(m, s)
    for X in regular_cyclic_subgroups(d, n):
        for Y in regular_cyclic_subgroups(d, n):
            ok = ok and check_bicsp(make_instance(X.certificate, Y.certificate, sigma)).passed
print("G(3,1,2), all pairs, s in {1, 5}:", ok)
