"""The symmetric group: recurrence, root-of-unity values, induced characters."""

from bimahonian import gordon_evaluate, gordon_specialize, type_a, wright_recurrence
from bimahonian.characters import induced_cyclic_character, intertwining
from bimahonian.cyclotomic import primitive_roots, root_of_unity
from bimahonian.distributions import genfun_check
from bimahonian.poly import reduce_mod_cyclic

for n in range(1, 5):
    print(f"S_{n}(t,q) =", wright_recurrence(n))

w3 = root_of_unity(3)
res = gordon_specialize(5, 3, w3)
print("S_5(zeta_3, q) =", res.lhs)
print("closed form agrees:", res.holds)
print("S_3(zeta_3, zeta_3) =", gordon_evaluate(3, w3, w3))
print("S_4(-1, -1) =", gordon_evaluate(4, -1, -1))
print("S_6 at roots of orders 2 and 3:", gordon_evaluate(6, primitive_roots(2)[0], w3))

n = 4
red = reduce_mod_cyclic(type_a(n), n, n)
chars = [induced_cyclic_character(n, i) for i in range(n)]
table = [[intertwining(chars[i], chars[j]) for j in range(n)] for i in range(n)]
print("reduced coefficients:", [[red.coeff(i, j) for j in range(n)] for i in range(n)])
print("intertwining numbers:", table)

print("generating function check (u^4, degree 5):", genfun_check(4, 5))
