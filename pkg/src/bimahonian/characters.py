"""Class functions on the symmetric group S_n, stored by cycle type."""

from __future__ import annotations

import functools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .cyclotomic import CycloNum, conj, lift, root_of_unity
from .errors import BudgetExceeded
from .tableaux import partitions

__all__ = [
    "DEFAULT_MAX_N",
    "ClassFunction",
    "cycle_type",
    "centralizer_order",
    "class_size",
    "mn_character",
    "induced_cyclic_character",
    "intertwining",
]

DEFAULT_MAX_N = 8

Partition = Tuple[int, ...]


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given as the images of 1..n."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def centralizer_order(mu: Partition) -> int:
    out = 1
    for part, mult in Counter(mu).items():
        out *= part ** mult * math.factorial(mult)
    return out


def class_size(mu: Partition) -> int:
    return math.factorial(sum(mu)) // centralizer_order(mu)


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: Dict[Partition, object] = field(hash=False)

    def __call__(self, mu: Partition):
        return self.values[tuple(mu)]

    def to_json(self) -> dict:
        vals = []
        for mu in partitions(self.n):
            v = self.values[mu]
            if not isinstance(v, CycloNum):
                v = CycloNum.rational(1, v)
            vals.append({"class": list(mu), "value": v.to_json()})
        return {"n": self.n, "values": vals}


def _check_n(n, max_n):
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds character budget {max_n}")


@functools.lru_cache(maxsize=None)
def _mn(shape: Partition, mu: Partition) -> int:
    # Murnaghan-Nakayama: remove a border strip of size mu[0], recurse on mu[1:]
    if not mu:
        return 1 if not shape else 0
    k = mu[0]
    rest = mu[1:]
    total = 0
    # work on the boundary sequence (beta numbers): strips <-> moves of a bead down by k
    L = len(shape)
    beta = [shape[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    for idx, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((x if x != b else nb) for x in beta)[::-1]
        Ln = len(new)
        parts = tuple(p for p in (new[i] - (Ln - 1 - i) for i in range(Ln)) if p > 0)
        total += (-1) ** height * _mn(parts, rest)
    return total


def mn_character(shape: Sequence[int], max_n: int = DEFAULT_MAX_N) -> ClassFunction:
    """Irreducible character of S_n indexed by ``shape``, via Murnaghan-Nakayama."""
    shape = tuple(shape)
    n = sum(shape)
    _check_n(n, max_n)
    return ClassFunction(n, {mu: _mn(shape, mu) for mu in partitions(n)})


def induced_cyclic_character(n: int, i: int, max_n: int = DEFAULT_MAX_N) -> ClassFunction:
    """Character of Ind from C_n = <(1 2 ... n)> to S_n of rho^i, rho(c) = zeta_n.

    Uses Ind(g) = |C_S(g)| / |C_n| * sum of rho^i over the elements of C_n in
    the class of g; c^a has cycle type (n/g)^g with g = gcd(a, n).
    """
    _check_n(n, max_n)
    vals: Dict[Partition, object] = {}
    for mu in partitions(n):
        acc = CycloNum.zero(n)
        for a in range(n):
            g = math.gcd(a, n)
            if (n // g,) * g == mu:
                acc = acc + root_of_unity(n, a * i)
        v = acc * Fraction(centralizer_order(mu), n)
        vals[mu] = v.to_rational() if v.is_rational() else v
    return ClassFunction(n, vals)


def intertwining(f: ClassFunction, g: ClassFunction):
    """<f, g> = (1/n!) sum over classes of |class| f conj(g)."""
    if f.n != g.n:
        raise ValueError(f"class functions on S_{f.n} and S_{g.n}")
    total = 0
    for mu in partitions(f.n):
        a, b = f.values[mu], conj(g.values[mu])
        if isinstance(a, CycloNum) or isinstance(b, CycloNum):
            a, b = lift(a, b)
        total = total + class_size(mu) * a * b
    total = total * Fraction(1, math.factorial(f.n))
    if isinstance(total, CycloNum) and total.is_rational():
        total = total.to_rational()
    if isinstance(total, Fraction) and total.denominator == 1:
        total = total.numerator
    return total
