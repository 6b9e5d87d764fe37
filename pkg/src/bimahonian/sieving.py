"""Regular elements and bicyclic sieving for G(d,1,n).

A regular element ``c`` with regular eigenvalue ``omega`` and a second one
``c2`` with ``omega2`` give an action of C x C2 on the group by
``(c^a, c2^b) . w = c^(s a) w c2^(-b)`` where sigma(omega) = omega^s.  The
cyclic groups are embedded in C^x by c -> omega^-1 and c2 -> omega2^-1.
:func:`check_bicsp` tests both equivalent forms of the sieving statement for
the polynomial W^sigma(t, q): root-of-unity evaluations against fixed-point
counts, and reduced coefficients against orbit counts.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .characters import cycle_type, mn_character
from .cyclotomic import CycloNum, GaloisAut, embed, root_exponent, root_of_unity
from .distributions import bimahonian_molien
from .errors import BudgetExceeded
from .poly import BiPoly, eval_at_root_exponents, eval_at_roots, reduce_mod_cyclic
from .tableaux import MultiPartition, fake_degree, galois_on_shape, partitions
from .wreath import (
    DEFAULT_MAX_GROUP_ORDER,
    WreathElem,
    char_poly_factors,
    enumerate_group,
    format_window,
    galois_on_element,
    group_order,
    reflections,
)

__all__ = [
    "DEFAULT_MAX_WORK",
    "RegularCertificate",
    "hyperplanes",
    "is_regular",
    "regular_elements",
    "RegularSubgroup",
    "regular_cyclic_subgroups",
    "group_exponent",
    "BiCSPInstance",
    "make_instance",
    "twisted_action",
    "Orbit",
    "orbits_and_stabilizers",
    "BiCSPReport",
    "check_bicsp",
    "verify_sigma_power",
]

DEFAULT_MAX_WORK = 10 ** 7

# hyperplane encodings: ("zero", i) is x_i = 0; ("ratio", i, j, k) is x_j = zeta_d^k x_i, i < j
Hyperplane = tuple


def _cycles(w: WreathElem) -> List[List[int]]:
    seen = set()
    out = []
    for start in range(1, w.n + 1):
        if start in seen:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = w.perm[i - 1]
        out.append(cyc)
    return out


def _reflecting_hyperplane(r: WreathElem) -> Hyperplane:
    moved = [i for i in range(1, r.n + 1) if r.perm[i - 1] != i]
    if not moved:
        (i,) = [i for i in range(1, r.n + 1) if r.colors[i - 1]]
        return ("zero", i)
    i, j = sorted(moved)
    # r e_i = zeta^k e_j, so a fixed vector has x_j = zeta^k x_i
    return ("ratio", i, j, r.colors[i - 1])


def hyperplanes(d: int, n: int) -> Dict[Hyperplane, int]:
    """Reflecting hyperplanes, each with the number of reflections fixing it."""
    return dict(_hyperplanes(d, n))


@functools.lru_cache(maxsize=None)
def _hyperplanes(d: int, n: int) -> Tuple[Tuple[Hyperplane, int], ...]:
    out: Dict[Hyperplane, int] = {}
    for r in reflections(d, n):
        h = _reflecting_hyperplane(r)
        out[h] = out.get(h, 0) + 1
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class RegularCertificate:
    element: WreathElem
    eigenvalue: CycloNum
    order: int
    witness: Tuple[CycloNum, ...]

    def check(self) -> bool:
        """Verify the eigen-equation and that the witness avoids every hyperplane."""
        c = self.element
        m = self.witness[0].m
        lam = embed(self.eigenvalue, m)
        if c.apply(self.witness) != [lam * x for x in self.witness]:
            return False
        return _avoids_hyperplanes(c.d, self.witness)

    def to_json(self) -> dict:
        return {
            "element": format_window(self.element),
            "eigenvalue": self.eigenvalue.to_json(),
            "order": self.order,
            "witness": [x.to_json() for x in self.witness],
        }


def _avoids_hyperplanes(d: int, v: Sequence[CycloNum]) -> bool:
    n = len(v)
    m = v[0].m
    for h, _ in _hyperplanes(d, n):
        if h[0] == "zero":
            if v[h[1] - 1].is_zero():
                return False
        else:
            _, i, j, k = h
            if v[j - 1] == v[i - 1] * root_of_unity(m, k * (m // d)):
                return False
    return True


def is_regular(c: WreathElem) -> List[RegularCertificate]:
    """One certificate per regular eigenvalue of c (empty if c is not regular).

    Eigenvalues are searched among zeta_L^e with L = lcm(d * cycle lengths).
    On each cycle the eigenvector is forced up to a scalar, or is zero when
    the cycle does not carry the eigenvalue.  Distinct positive integer
    scalars per cycle keep coordinates of different cycles from lying on a
    common hyperplane, so only the forced within-cycle ratios and the zero
    coordinates decide regularity.
    """
    d, n = c.d, c.n
    cycles = _cycles(c)
    factors = char_poly_factors(c)
    L = math.lcm(d, *(d * ell for ell, _ in factors))
    step = L // d
    certs = []
    for e in range(L):
        exps: Dict[int, int] = {}
        scalars: Dict[int, int] = {}
        for b, (cyc, (ell, k)) in enumerate(zip(cycles, factors)):
            if (e * ell - k * step) % L:
                continue  # eigenvalue not carried by this cycle: zero coordinates
            x = 0
            for i in cyc:
                exps[i] = x
                scalars[i] = b + 1
                x = (x + c.colors[i - 1] * step - e) % L
        v = []
        for i in range(1, n + 1):
            if i in exps:
                v.append(root_of_unity(L, exps[i]) * scalars[i])
            else:
                v.append(CycloNum.zero(L))
        lam = root_of_unity(L, e)
        if c.apply(v) != [lam * x for x in v]:
            raise AssertionError("eigenvector construction failed")
        if _avoids_hyperplanes(d, v):
            order = L // math.gcd(e, L)
            ev = root_of_unity(order, e // (L // order))
            certs.append(RegularCertificate(c, ev, order, tuple(v)))
    return certs


def regular_elements(d: int, n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER):
    """(element, certificates) for every regular element of G(d,1,n)."""
    out = []
    for w in enumerate_group(d, n, max_order):
        certs = is_regular(w)
        if certs:
            out.append((w, certs))
    return out


@dataclass(frozen=True)
class RegularSubgroup:
    generator: WreathElem
    certificate: RegularCertificate
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)


def regular_cyclic_subgroups(d: int, n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> List[RegularSubgroup]:
    """Distinct cyclic subgroups generated by regular elements, one generator each."""
    found: Dict[frozenset, RegularSubgroup] = {}
    for w, certs in regular_elements(d, n, max_order):
        k = w.order()
        elems = frozenset(w ** a for a in range(k))
        if elems not in found:
            found[elems] = RegularSubgroup(w, certs[0], elems)
    return list(found.values())


def group_exponent(d: int, n: int) -> int:
    """lcm of element orders of G(d,1,n); the conductor of the Galois group in use."""
    out = 1
    for ell in range(1, n + 1):
        out = math.lcm(out, ell * d)
    return out


@dataclass
class BiCSPInstance:
    c: WreathElem
    c_cert: RegularCertificate
    c2: WreathElem
    c2_cert: RegularCertificate
    sigma: GaloisAut
    s: int
    poly: BiPoly
    # use c^s w sigma(c2)^-1 instead of c^s w c2^-1
    sigma_on_right: bool = False

    @property
    def d(self) -> int:
        return self.c.d

    @property
    def n(self) -> int:
        return self.c.n

    @property
    def k(self) -> int:
        return self.c_cert.order

    @property
    def ell(self) -> int:
        return self.c2_cert.order


def make_instance(c_cert: RegularCertificate, c2_cert: RegularCertificate, sigma: GaloisAut,
                  poly: Optional[BiPoly] = None, sigma_on_right: bool = False) -> BiCSPInstance:
    """Assemble a sieving instance; W^sigma is computed by the Molien sum unless given."""
    c, c2 = c_cert.element, c2_cert.element
    d = c.d
    if sigma.m % d or sigma.m % c_cert.order:
        raise ValueError("sigma must act on zeta_d and on the regular eigenvalue")
    # sigma(omega) = omega^s with omega a primitive k-th root
    s = sigma.s % c_cert.order
    if poly is None:
        poly = bimahonian_molien(d, c.n, sigma.restrict(d))
    return BiCSPInstance(c, c_cert, c2, c2_cert, sigma, s, poly, sigma_on_right)


def _right_factor(inst: BiCSPInstance) -> WreathElem:
    if inst.sigma_on_right:
        return galois_on_element(inst.sigma.restrict(inst.d), inst.c2)
    return inst.c2


def twisted_action(inst: BiCSPInstance, i: int, j: int, w: WreathElem) -> WreathElem:
    """(c^i, c2^j) . w = c^(s i) w c2^(-j)."""
    return (inst.c ** (inst.s * i)) * w * (_right_factor(inst) ** (-j))


@dataclass(frozen=True)
class Orbit:
    elements: Tuple[WreathElem, ...]
    stabilizer: frozenset  # pairs (a, b) in Z/k x Z/l
    stabilizer_gens: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.elements)


def _small_generating_set(group: frozenset, k: int, ell: int) -> Tuple[Tuple[int, int], ...]:
    gens: List[Tuple[int, int]] = []
    span = {(0, 0)}
    for g in sorted(group):
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        span = set(span)
        while frontier:
            x = frontier.pop()
            for h in gens:
                y = ((x[0] + h[0]) % k, (x[1] + h[1]) % ell)
                if y not in span:
                    span.add(y)
                    frontier.append(y)
    return tuple(gens)


def _check_work(inst: BiCSPInstance, max_work: int):
    work = group_order(inst.d, inst.n) * inst.k * inst.ell
    if work > max_work:
        raise BudgetExceeded(f"orbit computation needs {work} steps, budget {max_work}")


class _ActionTables(NamedTuple):
    elements: List[WreathElem]
    left: List[List[int]]   # left[a][x]: index of c^(s a) * elements[x]
    right: List[List[int]]  # right[b][x]: index of elements[x] * c2^(-b)


def _action_tables(inst: BiCSPInstance) -> _ActionTables:
    elements = list(enumerate_group(inst.d, inst.n))
    index = {w: x for x, w in enumerate(elements)}
    left = []
    for a in range(inst.k):
        g = inst.c ** (inst.s * a)
        left.append([index[g * w] for w in elements])
    right = []
    h = _right_factor(inst)
    for b in range(inst.ell):
        g = h ** (-b)
        right.append([index[w * g] for w in elements])
    return _ActionTables(elements, left, right)


def orbits_and_stabilizers(inst: BiCSPInstance, max_work: int = DEFAULT_MAX_WORK,
                           tables: Optional[_ActionTables] = None) -> List[Orbit]:
    _check_work(inst, max_work)
    k, ell = inst.k, inst.ell
    if tables is None:
        tables = _action_tables(inst)
    elements, left, right = tables
    gen_left, gen_right = left[1 % k], right[1 % ell]
    seen = [False] * len(elements)
    orbits = []
    for start in range(len(elements)):
        if seen[start]:
            continue
        orbit = []
        frontier = [start]
        seen[start] = True
        while frontier:
            x = frontier.pop()
            orbit.append(elements[x])
            for y in (gen_left[x], gen_right[x]):
                if not seen[y]:
                    seen[y] = True
                    frontier.append(y)
        stab = frozenset((a, b) for a in range(k) for b in range(ell) if left[a][right[b][start]] == start)
        if len(orbit) * len(stab) != k * ell:
            raise AssertionError("orbit-stabilizer count mismatch")
        orbits.append(Orbit(tuple(orbit), stab, _small_generating_set(stab, k, ell)))
    return orbits


@dataclass
class BiCSPReport:
    k: int
    ell: int
    evaluations: List[List[CycloNum]]
    fixed_points: List[List[int]]
    a: List[List[int]]
    orbit_counts: List[List[int]]
    orbits: List[Orbit] = field(repr=False)

    @property
    def pass_i(self) -> bool:
        return all(self.evaluations[i][j] == self.fixed_points[i][j]
                   for i in range(self.k) for j in range(self.ell))

    @property
    def pass_ii(self) -> bool:
        return self.a == self.orbit_counts

    @property
    def passed(self) -> bool:
        return self.pass_i and self.pass_ii

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.ell,
            "evaluations": [[v.to_json() for v in row] for row in self.evaluations],
            "fixed_points": self.fixed_points,
            "a": self.a,
            "pass_i": self.pass_i,
            "pass_ii": self.pass_ii,
            "orbits": [{"size": o.size, "stabilizer_gens": [list(g) for g in o.stabilizer_gens]}
                       for o in self.orbits],
        }


def _root_exponent_in(x: CycloNum, order: int, M: int) -> int:
    # x is a primitive order-th root stored with conductor == order
    e = root_exponent(x)
    if e is None:
        raise ValueError(f"{x} is not a power of zeta_{x.m}")
    return e * (M // x.m)


def check_bicsp(inst: BiCSPInstance, max_work: int = DEFAULT_MAX_WORK) -> BiCSPReport:
    _check_work(inst, max_work)
    k, ell = inst.k, inst.ell
    M = math.lcm(k, ell)
    ea = _root_exponent_in(inst.c_cert.eigenvalue, k, M)
    eb = _root_exponent_in(inst.c2_cert.eigenvalue, ell, M)
    evaluations = [[eval_at_root_exponents(inst.poly, M, -i * ea, -j * eb) for j in range(ell)]
                   for i in range(k)]

    tables = _action_tables(inst)
    size = len(tables.elements)
    fixed = [[sum(1 for x in range(size) if li[rj[x]] == x) for rj in tables.right]
             for li in tables.left]

    red = reduce_mod_cyclic(inst.poly, k, ell)
    a = [[int(red.coeff(i, j)) for j in range(ell)] for i in range(k)]

    orbits = orbits_and_stabilizers(inst, max_work, tables)
    # rho^(i,j)(c^x, c2^y) = omega^(-x i) omega2^(-y j)
    counts = [[sum(1 for o in orbits
                   if all((x * i * ea + y * j * eb) % M == 0 for x, y in o.stabilizer))
               for j in range(ell)] for i in range(k)]
    return BiCSPReport(k, ell, evaluations, fixed, a, counts, orbits)


def verify_sigma_power(cert: RegularCertificate, sigma: GaloisAut,
                       shapes: Optional[Sequence[MultiPartition]] = None) -> bool:
    """Check f^{sigma(lambda)}(omega^-1) == chi^lambda(c^s) for every shape (d = 1).

    With sigma the identity this is the statement chi^lambda(c) = f^lambda(omega^-1).
    """
    c = cert.element
    if c.d != 1:
        raise NotImplementedError("character values are only available for d = 1")
    n = c.n
    if sigma.m % cert.order:
        raise ValueError("sigma must act on the regular eigenvalue")
    s = sigma.s % cert.order
    mu = cycle_type((c ** s).perm)
    if shapes is None:
        shapes = [MultiPartition.single(p) for p in partitions(n)]
    omega_inv = cert.eigenvalue ** -1
    for lam in shapes:
        f = fake_degree(galois_on_shape(sigma.restrict(1), lam))
        lhs = eval_at_roots(f, 1, omega_inv)
        rhs = mn_character(lam.components[0])(mu)
        if lhs != rhs:
            return False
    return True
