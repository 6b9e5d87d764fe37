"""Multipartitions, standard tableaux of d-tuple shapes, and colored RS.

A :class:`MultiPartition` stores its components by color index:
``components[k]`` is the partition lambda^k.  In the plane, lambda^0 sits in
the top rows and each lambda^k lies strictly south-west of lambda^(k-1), so a
cell of a higher-index component is always in a lower row.  The JSON form
lists components in the order ``[lambda^(d-1), ..., lambda^0]``.
"""

from __future__ import annotations

import bisect
import functools
from dataclasses import dataclass
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from .cyclotomic import GaloisAut
from .errors import BudgetExceeded, ConductorMismatch
from .poly import BiPoly
from .wreath import WreathElem

__all__ = [
    "DEFAULT_MAX_CELLS",
    "partitions",
    "MultiPartition",
    "multipartitions",
    "SkewTableau",
    "TableauStats",
    "enumerate_syt",
    "tableau_statistics",
    "fake_degree",
    "colored_rsk",
    "rsk_inverse",
    "galois_on_shape",
    "galois_on_tableau",
    "GALOIS_INDEX_EXPONENT",
]

DEFAULT_MAX_CELLS = 12

Partition = Tuple[int, ...]


def partitions(n: int, max_part: int = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _check_partition(p) -> Partition:
    p = tuple(int(x) for x in p)
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not a partition")
    return p


@dataclass(frozen=True)
class MultiPartition:
    components: Tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(_check_partition(c) for c in self.components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def d(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return sum(sum(c) for c in self.components)

    def sizes(self) -> Tuple[int, ...]:
        return tuple(sum(c) for c in self.components)

    def to_json(self) -> list:
        return [list(c) for c in reversed(self.components)]

    @classmethod
    def from_json(cls, doc: Sequence[Sequence[int]]) -> "MultiPartition":
        return cls(tuple(tuple(c) for c in reversed(doc)))

    @classmethod
    def single(cls, p: Sequence[int]) -> "MultiPartition":
        return cls((tuple(p),))

    def __str__(self):
        return "(" + " | ".join(",".join(map(str, c)) or "-" for c in reversed(self.components)) + ")"


def multipartitions(d: int, n: int) -> Iterator[MultiPartition]:
    """All d-tuples of partitions with n cells in total."""
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for a in range(total, -1, -1):
            for rest in compositions(total - a, parts - 1):
                yield (a,) + rest

    for sizes in compositions(n, d):
        def build(k):
            if k == d:
                yield ()
                return
            for p in partitions(sizes[k]):
                for rest in build(k + 1):
                    yield (p,) + rest
        for comps in build(0):
            yield MultiPartition(comps)


Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SkewTableau:
    """A standard filling of a multipartition shape, stored per component."""

    d: int
    components: Tuple[Rows, ...]

    def __post_init__(self):
        comps = tuple(tuple(tuple(r) for r in comp) for comp in self.components)
        if len(comps) != self.d:
            raise ValueError("number of components must equal d")
        object.__setattr__(self, "components", comps)

    @property
    def shape(self) -> MultiPartition:
        return MultiPartition(tuple(tuple(len(r) for r in comp) for comp in self.components))

    @property
    def n(self) -> int:
        return sum(len(r) for comp in self.components for r in comp)

    def is_standard(self) -> bool:
        values = sorted(v for comp in self.components for r in comp for v in r)
        if values != list(range(1, len(values) + 1)):
            return False
        for comp in self.components:
            for r in comp:
                if any(a >= b for a, b in zip(r, r[1:])):
                    return False
            for upper, lower in zip(comp, comp[1:]):
                if len(lower) > len(upper) or any(lower[c] <= upper[c] for c in range(len(lower))):
                    return False
        return True

    def positions(self) -> Dict[int, Tuple[int, int, int]]:
        """value -> (component, row, column)."""
        out = {}
        for k, comp in enumerate(self.components):
            for r, row in enumerate(comp):
                for c, v in enumerate(row):
                    out[v] = (k, r, c)
        return out

    def planar_rows(self) -> Dict[int, int]:
        """value -> global row index in the planar arrangement."""
        out = {}
        offset = 0
        for comp in self.components:
            for r, row in enumerate(comp):
                for v in row:
                    out[v] = offset + r
            offset += len(comp)
        return out

    def to_json(self) -> list:
        return [[list(r) for r in comp] for comp in reversed(self.components)]

    @classmethod
    def from_json(cls, doc) -> "SkewTableau":
        return cls(len(doc), tuple(tuple(tuple(r) for r in comp) for comp in reversed(doc)))

    @classmethod
    def single(cls, rows: Sequence[Sequence[int]]) -> "SkewTableau":
        return cls(1, (tuple(tuple(r) for r in rows),))


def enumerate_syt(shape: MultiPartition, max_cells: int = DEFAULT_MAX_CELLS) -> Iterator[SkewTableau]:
    """Every standard tableau of the given shape, each once."""
    n = shape.n
    if n > max_cells:
        raise BudgetExceeded(f"shape has {n} cells, budget is {max_cells}")
    target = shape.components
    d = shape.d
    # fill values n, n-1, ..., 1 into removable corners
    current = [list(c) for c in target]
    filling: List[List[List[int]]] = [[[0] * part for part in comp] for comp in target]

    def rec(v):
        if v == 0:
            yield SkewTableau(d, tuple(tuple(tuple(r) for r in comp) for comp in filling))
            return
        for k in range(d):
            comp = current[k]
            for r in range(len(comp)):
                if comp[r] == 0:
                    continue
                below = comp[r + 1] if r + 1 < len(comp) else 0
                if comp[r] > below:
                    c = comp[r] - 1
                    filling[k][r][c] = v
                    comp[r] -= 1
                    yield from rec(v - 1)
                    comp[r] += 1
                    filling[k][r][c] = 0

    yield from rec(n)


class TableauStats(NamedTuple):
    des_set: frozenset
    maj: int
    fmaj: int


def tableau_statistics(Q: SkewTableau) -> TableauStats:
    rows = Q.planar_rows()
    des = frozenset(i for i in range(1, Q.n) if rows[i + 1] > rows[i])
    maj = sum(des)
    sizes = Q.shape.sizes()
    fmaj = Q.d * maj + sum(k * size for k, size in enumerate(sizes))
    return TableauStats(des, maj, fmaj)


def fake_degree(shape: MultiPartition, max_cells: int = DEFAULT_MAX_CELLS) -> BiPoly:
    """Sum of q**fmaj(Q) over standard tableaux Q of the shape."""
    if shape.n > max_cells:
        raise BudgetExceeded(f"shape has {shape.n} cells, budget is {max_cells}")
    return _fake_degree(shape)


@functools.lru_cache(maxsize=None)
def _fake_degree(shape: MultiPartition) -> BiPoly:
    coeffs: Dict[int, int] = {}
    for Q in enumerate_syt(shape, shape.n):
        f = tableau_statistics(Q).fmaj
        coeffs[f] = coeffs.get(f, 0) + 1
    return BiPoly({(0, j): c for j, c in coeffs.items()})


# ---------------------------------------------------------------------------
# colored Robinson-Schensted


def _row_insert(P: List[List[int]], Q: List[List[int]], x: int, label: int):
    r = 0
    while True:
        if r == len(P):
            P.append([x])
            Q.append([label])
            return
        row = P[r]
        pos = bisect.bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            Q[r].append(label)
            return
        row[pos], x = x, row[pos]
        r += 1


def _freeze(comps) -> Tuple[Rows, ...]:
    return tuple(tuple(tuple(r) for r in comp) for comp in comps)


def colored_rsk(w: WreathElem) -> Tuple[SkewTableau, SkewTableau]:
    """Insert each color class of the window word into its own component.

    Letter values j are row-inserted into P^k for letters of color k and the
    position i is recorded in Q^k.
    """
    d = w.d
    P = [[] for _ in range(d)]
    Q = [[] for _ in range(d)]
    for i, (k, j) in enumerate(w.letters(), start=1):
        _row_insert(P[k], Q[k], j, i)
    return SkewTableau(d, _freeze(P)), SkewTableau(d, _freeze(Q))


def rsk_inverse(P: SkewTableau, Q: SkewTableau) -> WreathElem:
    if P.d != Q.d or P.shape != Q.shape:
        raise ValueError("P and Q must have the same shape")
    d, n = P.d, P.n
    Pm = [[list(r) for r in comp] for comp in P.components]
    qpos = Q.positions()
    letters = [None] * n
    for i in range(n, 0, -1):
        k, r, c = qpos[i]
        comp = Pm[k]
        if c != len(comp[r]) - 1:
            raise ValueError("Q is not standard")
        x = comp[r].pop()
        if not comp[r]:
            comp.pop()
        for rr in range(r - 1, -1, -1):
            row = comp[rr]
            pos = bisect.bisect_left(row, x) - 1
            row[pos], x = x, row[pos]
        letters[i - 1] = (k, x)
    return WreathElem.from_letters(d, letters)


# Component k of a shape moves to component s**GALOIS_INDEX_EXPONENT * k (mod d).
# Fixed so that colored_rsk(sigma(w)) == (sigma(P), sigma(Q)).
GALOIS_INDEX_EXPONENT = 1


def _index_map(sigma: GaloisAut, d: int) -> List[int]:
    if sigma.m % d:
        raise ConductorMismatch(f"automorphism conductor {sigma.m} not divisible by d={d}")
    mult = pow(sigma.s, GALOIS_INDEX_EXPONENT, d) if d > 1 else 0
    return [(mult * k) % d for k in range(d)]


def galois_on_shape(sigma: GaloisAut, shape: MultiPartition) -> MultiPartition:
    target = _index_map(sigma, shape.d)
    comps = [()] * shape.d
    for k, c in enumerate(shape.components):
        comps[target[k]] = c
    return MultiPartition(tuple(comps))


def galois_on_tableau(sigma: GaloisAut, Q: SkewTableau) -> SkewTableau:
    target = _index_map(sigma, Q.d)
    comps = [()] * Q.d
    for k, c in enumerate(Q.components):
        comps[target[k]] = c
    return SkewTableau(Q.d, tuple(comps))
