"""Mahonian and bimahonian distributions of G(d,1,n).

The bimahonian distribution for a Galois automorphism sigma can be computed
four ways here:

* ``fake_degree``: sum over shapes of f^{sigma(lambda)}(t) f^{conj(lambda)}(q),
* ``fmaj_sum``: sum over group elements of q^fmaj(w) t^fmaj(sigma(w^-1)),
* ``molien``: the averaged Molien-type sum over the group,
* ``wright_recurrence``: the type A recurrence (d = 1 only).

``molien`` involves no indexing conventions and serves as the reference.
"""

from __future__ import annotations

import functools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, NamedTuple, Optional, Tuple, Union

from .cyclotomic import (
    CycloNum,
    GaloisAut,
    mult_order,
    root_of_unity,
)
from .errors import VerificationError
from .poly import (
    BiPoly,
    TruncSeries,
    eval_at_roots,
    exact_div,
    q_integer,
    qpochhammer,
)
from .tableaux import (
    DEFAULT_MAX_CELLS,
    fake_degree,
    galois_on_shape,
    multipartitions,
)
from .wreath import (
    DEFAULT_MAX_GROUP_ORDER,
    WreathElem,
    char_poly_factors,
    degrees,
    enumerate_group,
    galois_on_element,
    group_order,
    word_statistics,
)

__all__ = [
    "METHODS",
    "DistributionRequest",
    "as_sigma",
    "mahonian",
    "bimahonian",
    "bimahonian_fake",
    "bimahonian_fmaj",
    "bimahonian_molien",
    "wright_recurrence",
    "type_a",
    "GordonResult",
    "gordon_specialize",
    "gordon_evaluate",
    "gordon_prediction",
    "genfun_lhs",
    "genfun_rhs",
    "count_bipartite_partitions",
    "genfun_check",
    "cyclic_closed_form",
]

METHODS = ("fake_degree", "fmaj_sum", "molien", "wright_recurrence")

SigmaLike = Union[GaloisAut, int, None]


def as_sigma(d: int, sigma: SigmaLike) -> GaloisAut:
    """Normalize an automorphism argument; an int s means zeta_d -> zeta_d**s."""
    if sigma is None:
        return GaloisAut(d, 1)
    if isinstance(sigma, GaloisAut):
        if sigma.m % d:
            raise ValueError(f"automorphism conductor {sigma.m} is not divisible by d={d}")
        return sigma.restrict(d)
    return GaloisAut(d, sigma)


@dataclass(frozen=True)
class DistributionRequest:
    d: int
    n: int
    sigma: GaloisAut
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.sigma.m % self.d:
            raise ValueError("sigma's conductor must be divisible by d")
        if self.method == "wright_recurrence" and (self.d != 1 or self.sigma.s % self.d != 1 % self.d):
            raise ValueError("the recurrence applies to d = 1 with the identity automorphism only")

    def compute(self, **budgets) -> BiPoly:
        return bimahonian(self.d, self.n, self.sigma, self.method, **budgets)


def mahonian(d: int, n: int) -> BiPoly:
    """W(q) = prod over degrees of [d_i]_q."""
    out = BiPoly.one()
    for di in degrees(d, n):
        out = out * q_integer(di)
    return out


def bimahonian(d: int, n: int, sigma: SigmaLike = None, method: str = "molien",
               max_order: int = DEFAULT_MAX_GROUP_ORDER, max_cells: int = DEFAULT_MAX_CELLS) -> BiPoly:
    if method == "fake_degree":
        return bimahonian_fake(d, n, sigma, max_cells=max_cells)
    if method == "fmaj_sum":
        return bimahonian_fmaj(d, n, sigma, max_order=max_order)
    if method == "molien":
        return bimahonian_molien(d, n, sigma, max_order=max_order)
    if method == "wright_recurrence":
        DistributionRequest(d, n, as_sigma(d, sigma), method)
        return wright_recurrence(n)
    raise ValueError(f"unknown method {method!r}")


def bimahonian_fake(d: int, n: int, sigma: SigmaLike = None, max_cells: int = DEFAULT_MAX_CELLS) -> BiPoly:
    sigma = as_sigma(d, sigma)
    bar = GaloisAut(d, -1)
    fd = {lam: fake_degree(lam, max_cells) for lam in multipartitions(d, n)}
    out = BiPoly()
    for lam, f in fd.items():
        ft = fd[galois_on_shape(sigma, lam)].swap()
        fq = fd[galois_on_shape(bar, lam)]
        out = out + ft * fq
    return out


def bimahonian_fmaj(d: int, n: int, sigma: SigmaLike = None, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> BiPoly:
    sigma = as_sigma(d, sigma)
    counts: Counter = Counter()
    for w in enumerate_group(d, n, max_order):
        a = word_statistics(w).fmaj
        b = word_statistics(galois_on_element(sigma, w.inverse())).fmaj
        counts[(b, a)] += 1
    return BiPoly(dict(counts))


@functools.lru_cache(maxsize=None)
def _graded_trace(d: int, degs: Tuple[int, ...], factors: Tuple[Tuple[int, int], ...]) -> Tuple:
    """Coefficients of prod(1 - t^d_i) / prod(1 - zeta^k t^l) as a truncated series.

    Truncated above the known degree N*, with a guard band that must vanish.
    """
    nstar = sum(di - 1 for di in degs)
    bound = nstar + max(degs)
    bounds = (bound, 0, 0)
    num = TruncSeries.one(bounds)
    for di in degs:
        num = num * TruncSeries(bounds, {(0, 0, 0): 1, (di, 0, 0): -1})
    den = TruncSeries.one(bounds)
    for ell, k in factors:
        den = den * TruncSeries(bounds, {(0, 0, 0): 1, (ell, 0, 0): -root_of_unity(d, k)})
    series = num * den.reciprocal()
    coeffs = [series.coeff(i, 0, 0) for i in range(bound + 1)]
    if any(coeffs[nstar + 1:]):
        raise VerificationError(f"Molien summand for cycle data {factors} is not a polynomial of degree <= {nstar}")
    return tuple(c if isinstance(c, CycloNum) else CycloNum.rational(d, c) for c in coeffs[:nstar + 1])


def _class_key(w: WreathElem) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(char_poly_factors(w)))


def bimahonian_molien(d: int, n: int, sigma: SigmaLike = None, max_order: int = DEFAULT_MAX_GROUP_ORDER,
                      aggregate: bool = True) -> BiPoly:
    """(1/|W|) sum_w prod(1-t^d_i)(1-q^d_i) / (det(1-tw) det(1-q sigma(w))).

    With ``aggregate`` the summands are grouped by cycle data (length, color
    sum), on which each summand depends; otherwise every element is summed.
    """
    sigma = as_sigma(d, sigma)
    degs = degrees(d, n)
    if aggregate:
        classes = Counter(_class_key(w) for w in enumerate_group(d, n, max_order))
    else:
        classes = [(_class_key(w), 1) for w in enumerate_group(d, n, max_order)]
        classes = _IterCounter(classes)
    total: Dict[Tuple[int, int], CycloNum] = {}
    zero = CycloNum.zero(d)
    for key, count in classes.items():
        tcoeffs = _graded_trace(d, degs, key)
        skey = tuple(sorted((ell, (sigma.s * k) % d) for ell, k in key))
        qcoeffs = _graded_trace(d, degs, skey)
        for i, a in enumerate(tcoeffs):
            if not a:
                continue
            a = a * count
            for j, b in enumerate(qcoeffs):
                if b:
                    total[(i, j)] = total.get((i, j), zero) + a * b
    order = group_order(d, n)
    out = {}
    for e, c in total.items():
        if not c.is_rational():
            raise VerificationError(f"Molien coefficient at {e} is not rational: {c}")
        v = Fraction(c.to_rational()) / order
        if v.denominator != 1:
            raise VerificationError(f"Molien coefficient at {e} is not an integer: {v}")
        out[e] = v.numerator
    return BiPoly(out)


class _IterCounter:
    def __init__(self, pairs):
        self._pairs = pairs

    def items(self):
        return iter(self._pairs)


# ---------------------------------------------------------------------------
# type A


@functools.lru_cache(maxsize=None)
def _wright(n: int) -> BiPoly:
    if n == 0:
        return BiPoly.one()
    total = BiPoly()
    tn, qn = qpochhammer(n, "t"), qpochhammer(n, "q")
    for m in range(1, n + 1):
        ratio = exact_div(tn * qn, qpochhammer(n - m, "t") * qpochhammer(n - m, "q"))
        term = exact_div(ratio * _wright(n - m), (1 - BiPoly.monomial(m, 0)) * (1 - BiPoly.monomial(0, m)))
        total = total + term
    out = total / n
    if not out.has_integer_coeffs():
        raise VerificationError(f"recurrence produced non-integral coefficients at n={n}")
    return out


def wright_recurrence(n: int) -> BiPoly:
    """S_n(t, q) from the recurrence obtained by log-differentiating the bipartite generating function."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _wright(n)


@functools.lru_cache(maxsize=None)
def type_a(n: int) -> BiPoly:
    """S_n(t, q), via fake degrees (S_0 = 1)."""
    if n == 0:
        return BiPoly.one()
    return bimahonian_fake(1, n)


class GordonResult(NamedTuple):
    n: int
    ell: int
    m: int
    r: int
    lhs: BiPoly
    rhs: BiPoly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _order_of(omega) -> int:
    k = mult_order(omega)
    if k is None:
        raise ValueError(f"{omega} is not a root of unity")
    return k


def gordon_specialize(n: int, ell: int, omega: CycloNum, check: bool = False) -> GordonResult:
    """Both sides of S_n(omega, q) = (q;q)_n / ((q;q)_r (1-q^l)^m) * S_r(omega, q)."""
    if _order_of(omega) != ell:
        raise ValueError(f"omega has order {_order_of(omega)}, expected {ell}")
    m, r = divmod(n, ell)
    lhs = type_a(n).specialize(t=omega)
    factor = exact_div(qpochhammer(n), qpochhammer(r) * (1 - BiPoly.monomial(0, ell)) ** m)
    rhs = factor * type_a(r).specialize(t=omega)
    res = GordonResult(n, ell, m, r, lhs, rhs)
    if check and not res.holds:
        raise VerificationError(f"specialization identity fails for n={n}, order {ell}")
    return res


def gordon_evaluate(n: int, omega, omega2) -> CycloNum:
    """S_n(omega, omega2) exactly."""
    return eval_at_roots(type_a(n), omega, omega2)


def gordon_prediction(n: int, omega, omega2) -> Optional[CycloNum]:
    """Closed-form value of S_n(omega, omega2) where one is known, else None.

    Unequal orders, both at most n, give 0; equal orders l with n = m*l + r
    give l**m * m! * S_r(omega, omega2).
    """
    a, b = _order_of(omega), _order_of(omega2)
    if a != b:
        if a <= n and b <= n:
            return eval_at_roots(BiPoly(), omega, omega2)
        return None
    m, r = divmod(n, a)
    return gordon_evaluate(r, omega, omega2) * (a ** m * math.factorial(m))


# ---------------------------------------------------------------------------
# bipartite partitions generating function


def genfun_lhs(N: int, D: int) -> TruncSeries:
    """prod over i, j >= 0 of 1/(1 - t^i q^j u), truncated at (D, D, N)."""
    bounds = (D, D, N)
    out = TruncSeries.one(bounds)
    for i in range(D + 1):
        for j in range(D + 1):
            geo = TruncSeries(bounds, {(i * k, j * k, k): 1 for k in range(N + 1)})
            out = out * geo
    return out


def genfun_rhs(N: int, D: int) -> TruncSeries:
    """sum_n u^n S_n(t, q) / ((t;t)_n (q;q)_n), truncated at (D, D, N)."""
    bounds = (D, D, N)
    out = TruncSeries(bounds)
    for n in range(N + 1):
        den = TruncSeries.from_poly(bounds, qpochhammer(n, "t") * qpochhammer(n, "q"))
        num = TruncSeries.from_poly(bounds, type_a(n), u_degree=n)
        out = out + num * den.reciprocal()
    return out


def count_bipartite_partitions(n: int, D: int) -> Dict[Tuple[int, int], int]:
    """Number of multisets of n pairs in N^2 with coordinate sums (a, b), a, b <= D."""
    pairs = [(i, j) for i in range(D + 1) for j in range(D + 1)]
    counts: Counter = Counter()

    def rec(start, left, a, b):
        if left == 0:
            counts[(a, b)] += 1
            return
        for idx in range(start, len(pairs)):
            i, j = pairs[idx]
            if a + i <= D and b + j <= D:
                rec(idx, left - 1, a + i, b + j)

    rec(0, n, 0, 0)
    return dict(counts)


def genfun_check(N: int, D: int) -> bool:
    """Both sides agree to the truncation, and the left side counts bipartite partitions."""
    lhs = genfun_lhs(N, D)
    if lhs != genfun_rhs(N, D):
        return False
    for n in range(N + 1):
        if lhs.u_coefficient(n) != BiPoly(count_bipartite_partitions(n, D)):
            return False
    return True


def cyclic_closed_form(d: int, s: int) -> BiPoly:
    """sum of t^a q^b over a, b in 0..d-1 with a + s b = 0 mod d (the n = 1 case)."""
    return BiPoly({(a, b): 1 for a in range(d) for b in range(d) if (a + s * b) % d == 0})
