"""Named verification suites shared by the command line and the test suite.

Each suite returns a list of :class:`Check` records; a suite passes when
every check does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .characters import cycle_type, induced_cyclic_character, intertwining
from .cyclotomic import GaloisAut, conj, is_fixed_by_conjugation, primitive_roots
from .distributions import (
    bimahonian_fake,
    bimahonian_fmaj,
    bimahonian_molien,
    cyclic_closed_form,
    genfun_check,
    gordon_evaluate,
    gordon_prediction,
    gordon_specialize,
    mahonian,
    type_a,
    wright_recurrence,
)
from .poly import BiPoly, eval_at_roots, is_palindromic, reduce_mod_cyclic
from .sieving import (
    check_bicsp,
    group_exponent,
    is_regular,
    make_instance,
    regular_cyclic_subgroups,
    verify_sigma_power,
)
from .wreath import DEFAULT_MAX_GROUP_ORDER, enumerate_group, num_reflections, word_statistics

__all__ = [
    "Check",
    "SUITES",
    "run_suite",
    "suite_crossmethod",
    "suite_bicsp",
    "suite_gordon",
    "suite_springer",
    "suite_genfun",
    "suite_symmetry",
    "suite_palindrome",
    "suite_cyclic",
    "suite_bss",
    "suite_regular_classification",
    "units",
]


@dataclass
class Check:
    suite: str
    name: str
    inputs: Dict[str, object]
    passed: bool
    detail: Optional[str] = field(default=None)

    def to_json(self) -> dict:
        doc = {"suite": self.suite, "name": self.name, "inputs": self.inputs, "passed": self.passed}
        if self.detail:
            doc["detail"] = self.detail
        return doc


def units(d: int) -> List[int]:
    return [s for s in range(d) if math.gcd(s, d) == 1] or [0]


def suite_crossmethod(d: int, n: int, sigmas: Optional[List[int]] = None) -> List[Check]:
    out = []
    for s in sigmas if sigmas is not None else units(d):
        fake = bimahonian_fake(d, n, s)
        fm = bimahonian_fmaj(d, n, s)
        mol = bimahonian_molien(d, n, s)
        ok = fake == fm == mol
        if d == 1:
            ok = ok and wright_recurrence(n) == mol
        out.append(Check("crossmethod", "fake = fmaj = molien", {"d": d, "n": n, "s": s % d}, ok))
    return out


def suite_bicsp(d: int, n: int, sigmas: Optional[List[int]] = None,
                max_order: int = DEFAULT_MAX_GROUP_ORDER) -> List[Check]:
    """Every ordered pair of regular cyclic subgroups, every automorphism of the group's field."""
    m = group_exponent(d, n)
    auts = [GaloisAut(m, s) for s in sigmas] if sigmas is not None else GaloisAut.all(m)
    subs = regular_cyclic_subgroups(d, n, max_order)
    polys: Dict[int, BiPoly] = {}
    out = []
    for A in subs:
        for B in subs:
            seen = set()
            for sigma in auts:
                key = (sigma.s % d, sigma.s % A.certificate.order)
                if key in seen:
                    continue
                seen.add(key)
                if key[0] not in polys:
                    polys[key[0]] = bimahonian_molien(d, n, sigma.restrict(d), max_order=max_order)
                rep = check_bicsp(make_instance(A.certificate, B.certificate, sigma, polys[key[0]]))
                inputs = {"d": d, "n": n, "s": sigma.s, "c": str(A.generator), "c2": str(B.generator)}
                out.append(Check("bicsp", "condition (i)", inputs, rep.pass_i))
                out.append(Check("bicsp", "condition (ii)", inputs, rep.pass_ii))
    return out


def suite_gordon(n: int) -> List[Check]:
    """Specialization identity at every primitive root of order <= n, and the closed-form values."""
    out = []
    for ell in range(1, n + 1):
        for omega in primitive_roots(ell):
            res = gordon_specialize(n, ell, omega)
            out.append(Check("gordon", "specialization", {"n": n, "omega": str(omega)}, res.holds))
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for omega in primitive_roots(a):
                for omega2 in primitive_roots(b):
                    want = gordon_prediction(n, omega, omega2)
                    got = gordon_evaluate(n, omega, omega2)
                    out.append(Check("gordon", "evaluation", {"n": n, "omega": str(omega), "omega2": str(omega2)},
                                     got == want))
    return out


def suite_springer(n: int) -> List[Check]:
    out = []
    m = group_exponent(1, n)
    for w in enumerate_group(1, n):
        for cert in is_regular(w):
            for sigma in GaloisAut.all(m):
                ok = verify_sigma_power(cert, sigma)
                out.append(Check("springer", "character = fake degree at omega^-1",
                                 {"n": n, "c": str(w), "omega": str(cert.eigenvalue), "s": sigma.s}, ok))
    return out


def suite_genfun(N: int, D: int = 6) -> List[Check]:
    return [Check("genfun", "truncated product = series", {"N": N, "D": D}, genfun_check(N, D))]


def suite_symmetry(d: int, n: int) -> List[Check]:
    out = []
    W = mahonian(d, n)
    counts: Dict[int, int] = {}
    for w in enumerate_group(d, n):
        f = word_statistics(w).fmaj
        counts[f] = counts.get(f, 0) + 1
    fmaj = BiPoly({(0, j): c for j, c in counts.items()})
    out.append(Check("symmetry", "product formula = fmaj distribution", {"d": d, "n": n}, W == fmaj))
    Nstar = num_reflections(d, n)
    for s in units(d):
        P = bimahonian_molien(d, n, s)
        inv = pow(s, -1, d) if d > 1 else 0
        Q = bimahonian_molien(d, n, inv)
        inputs = {"d": d, "n": n, "s": s}
        out.append(Check("symmetry", "swap t,q = inverse automorphism", inputs, P.swap() == Q))
        out.append(Check("symmetry", "W(1,q) = W(q,1) = W(q)", inputs,
                         P.specialize(t=1) == W and P.specialize(q=1) == W.swap()))
        out.append(Check("symmetry", "degrees are N*", inputs,
                         P.degree_t == Nstar and P.degree_q == Nstar))
    if d == 1:
        for ell in range(1, n + 1):
            for omega in primitive_roots(ell):
                val = eval_at_roots(type_a(n), omega, conj(omega))
                out.append(Check("symmetry", "antidiagonal value is real", {"n": n, "omega": str(omega)},
                                 is_fixed_by_conjugation(val)))
    return out


def suite_palindrome(d: int, n: int) -> List[Check]:
    P = bimahonian_molien(d, n, -1)
    return [Check("palindrome", "conjugate distribution is palindromic", {"d": d, "n": n},
                  is_palindromic(P, num_reflections(d, n)))]


def suite_cyclic(d: int) -> List[Check]:
    """The n = 1 distributions for every cyclic group of order up to d."""
    out = []
    for dd in range(1, d + 1):
        for s in units(dd):
            P = bimahonian_molien(dd, 1, s)
            out.append(Check("cyclic", "closed form", {"d": dd, "s": s}, P == cyclic_closed_form(dd, s)))
    return out


def suite_bss(n: int) -> List[Check]:
    red = reduce_mod_cyclic(type_a(n), n, n)
    chars = [induced_cyclic_character(n, i) for i in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            ok = red.coeff(i, j) == intertwining(chars[i], chars[j])
            out.append(Check("bss", "reduced coefficient = intertwining number", {"n": n, "i": i, "j": j}, ok))
    return out


def _is_power_of_long_cycle(perm, n) -> bool:
    # a power of an n-cycle has all cycles of one length; of an (n-1)-cycle, the same plus a fixed point
    mu = cycle_type(perm)
    if len(set(mu)) == 1:
        return True
    return mu[-1] == 1 and len(set(mu[:-1])) == 1 and mu.count(1) == 1


def suite_regular_classification(n: int) -> List[Check]:
    out = []
    for w in enumerate_group(1, n):
        expected = _is_power_of_long_cycle(w.perm, n)
        out.append(Check("regular", "regular iff power of an n- or (n-1)-cycle",
                         {"n": n, "w": str(w)}, bool(is_regular(w)) == expected))
    return out


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "bicsp": lambda d, n, **kw: suite_bicsp(d, n),
    "gordon": lambda d, n, **kw: suite_gordon(n),
    "springer": lambda d, n, **kw: suite_springer(n),
    "genfun": lambda d, n, degree=6, **kw: suite_genfun(n, degree),
    "symmetry": lambda d, n, **kw: suite_symmetry(d, n),
    "palindrome": lambda d, n, **kw: suite_palindrome(d, n),
    "cyclic": lambda d, n, **kw: suite_cyclic(d),
}


def run_suite(name: str, d: int, n: int, **kw) -> List[Check]:
    if name == "all":
        out = []
        for key in SUITES:
            if key == "springer" and d != 1:
                continue
            out.extend(SUITES[key](d, n, **kw))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](d, n, **kw)
