"""The groups G(d,1,n) = Z/dZ wr S_n of colored permutations.

An element is stored in window notation: ``perm[i-1] = j`` and
``colors[i-1] = k`` mean the element sends the basis vector e_i to
zeta_d**k e_j.  Products are products of the corresponding monomial
matrices, so ``(x * y)(v) == x(y(v))``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from .cyclotomic import CycloNum, GaloisAut, lift, root_of_unity
from .errors import BudgetExceeded, ConductorMismatch
from .poly import BiPoly

__all__ = [
    "WreathElem",
    "WordStats",
    "DEFAULT_MAX_GROUP_ORDER",
    "group_order",
    "enumerate_group",
    "word_statistics",
    "galois_on_element",
    "char_poly_factors",
    "det_one_minus",
    "degrees",
    "num_reflections",
    "reflections",
    "parse_window",
    "format_window",
]

DEFAULT_MAX_GROUP_ORDER = 10 ** 6


@dataclass(frozen=True)
class WreathElem:
    d: int
    perm: Tuple[int, ...]
    colors: Tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(j) for j in self.perm)
        n = len(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{n}")
        if len(self.colors) != n:
            raise ValueError("colors and perm have different lengths")
        if self.d < 1:
            raise ValueError("d must be positive")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "colors", tuple(int(k) % self.d for k in self.colors))

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, d: int, n: int) -> "WreathElem":
        return cls(d, tuple(range(1, n + 1)), (0,) * n)

    @classmethod
    def from_letters(cls, d: int, letters: Sequence[Tuple[int, int]]) -> "WreathElem":
        """From a window word given as ``(color, value)`` letters."""
        return cls(d, tuple(j for _, j in letters), tuple(k for k, _ in letters))

    def letters(self) -> List[Tuple[int, int]]:
        return list(zip(self.colors, self.perm))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1)) and not any(self.colors)

    def _check(self, other: "WreathElem"):
        if other.d != self.d or other.n != self.n:
            raise ValueError(
                f"G({self.d},1,{self.n}) and G({other.d},1,{other.n}) elements do not compose")

    def __mul__(self, other: "WreathElem") -> "WreathElem":
        self._check(other)
        d = self.d
        perm = tuple(self.perm[j - 1] for j in other.perm)
        colors = tuple((k + self.colors[j - 1]) % d for k, j in zip(other.colors, other.perm))
        return WreathElem._raw(d, perm, colors)

    def inverse(self) -> "WreathElem":
        n, d = self.n, self.d
        perm = [0] * n
        colors = [0] * n
        for i, (j, k) in enumerate(zip(self.perm, self.colors), start=1):
            perm[j - 1] = i
            colors[j - 1] = (-k) % d
        return WreathElem._raw(d, tuple(perm), tuple(colors))

    def conj_by(self, y: "WreathElem") -> "WreathElem":
        """y * self * y^-1."""
        return y * self * y.inverse()

    def __pow__(self, k: int) -> "WreathElem":
        if k < 0:
            return self.inverse() ** (-k)
        result = WreathElem.identity(self.d, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        return math.lcm(*(ell * (self.d // math.gcd(k, self.d)) for ell, k in char_poly_factors(self)))

    def conjugate_colors(self) -> "WreathElem":
        """The complex conjugate element (all colors negated)."""
        return WreathElem._raw(self.d, self.perm, tuple((-k) % self.d for k in self.colors))

    def matrix(self) -> List[List[CycloNum]]:
        """The n x n monomial matrix over Q(zeta_d)."""
        n = self.n
        zero = CycloNum.zero(self.d)
        rows = [[zero] * n for _ in range(n)]
        for i, (j, k) in enumerate(zip(self.perm, self.colors)):
            rows[j - 1][i] = root_of_unity(self.d, k)
        return rows

    def apply(self, v: Sequence) -> list:
        """The image of a coordinate vector (entries in a field containing zeta_d)."""
        out = [None] * self.n
        for i, (j, k) in enumerate(zip(self.perm, self.colors)):
            z = root_of_unity(self.d, k)
            x = v[i]
            if isinstance(x, CycloNum) and x.m != self.d:
                x, z = lift(x, z)
            out[j - 1] = z * x
        return out

    def __str__(self):
        return format_window(self)

    @classmethod
    def _raw(cls, d, perm, colors):
        obj = object.__new__(cls)
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "perm", perm)
        object.__setattr__(obj, "colors", colors)
        return obj


def group_order(d: int, n: int) -> int:
    return d ** n * math.factorial(n)


def enumerate_group(d: int, n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> Iterator[WreathElem]:
    """Every element of G(d,1,n), each once, in a fixed order."""
    if group_order(d, n) > max_order:
        raise BudgetExceeded(f"|G({d},1,{n})| = {group_order(d, n)} exceeds budget {max_order}")
    colorings = list(itertools.product(range(d), repeat=n))
    for perm in itertools.permutations(range(1, n + 1)):
        for colors in colorings:
            yield WreathElem._raw(d, perm, colors)


class WordStats(NamedTuple):
    des_set: frozenset
    inv: int
    maj: int
    fmaj: int
    r: Tuple[int, ...]


def _letter_key(d: int, k: int, j: int) -> Tuple[int, int]:
    # color d-1 letters are smallest, color 0 letters largest
    return (d - 1 - k, j)


def word_statistics(w: WreathElem) -> WordStats:
    """Descent set, inv, maj, fmaj and subalphabet counts of the window word."""
    d = w.d
    keys = [_letter_key(d, k, j) for k, j in zip(w.colors, w.perm)]
    des = frozenset(i for i in range(1, w.n) if keys[i] < keys[i - 1])
    inv = sum(1 for a, b in itertools.combinations(keys, 2) if a > b)
    maj = sum(des)
    r = [0] * d
    for k in w.colors:
        r[k] += 1
    fmaj = d * maj + sum(k * rk for k, rk in enumerate(r))
    return WordStats(des, inv, maj, fmaj, tuple(r))


def galois_on_element(sigma: GaloisAut, w: WreathElem) -> WreathElem:
    """Apply sigma entrywise to the matrix of w: colors k -> s*k mod d."""
    if sigma.m % w.d:
        raise ConductorMismatch(f"automorphism conductor {sigma.m} not divisible by d={w.d}")
    s = sigma.s
    return WreathElem._raw(w.d, w.perm, tuple((s * k) % w.d for k in w.colors))


def char_poly_factors(w: WreathElem) -> List[Tuple[int, int]]:
    """(cycle length, color sum mod d) per cycle, so det(1-tw) = prod(1 - zeta^k t^l)."""
    seen = [False] * (w.n + 1)
    out = []
    for start in range(1, w.n + 1):
        if seen[start]:
            continue
        length, total, i = 0, 0, start
        while not seen[i]:
            seen[i] = True
            length += 1
            total += w.colors[i - 1]
            i = w.perm[i - 1]
        out.append((length, total % w.d))
    return out


def det_one_minus(w: WreathElem, var: str = "t") -> BiPoly:
    """det(1 - x w) as a polynomial in ``var`` with coefficients in Q(zeta_d)."""
    out = BiPoly.one()
    for ell, k in char_poly_factors(w):
        mono = BiPoly.monomial(ell, 0) if var == "t" else BiPoly.monomial(0, ell)
        out = out * (1 - mono * root_of_unity(w.d, k))
    return out


def degrees(d: int, n: int) -> Tuple[int, ...]:
    """Degrees of the basic invariants: 1..n for d=1, d, 2d, ..., nd otherwise."""
    return tuple(i * d for i in range(1, n + 1))


def num_reflections(d: int, n: int) -> int:
    """N* = sum of (degree - 1)."""
    return sum(di - 1 for di in degrees(d, n))


def _is_reflection(w: WreathElem) -> bool:
    # each cycle (l, k) has l eigenvalues, exactly one equal to 1 iff k == 0
    return sum(ell - (k == 0) for ell, k in char_poly_factors(w)) == 1


def reflections(d: int, n: int, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> List[WreathElem]:
    return [w for w in enumerate_group(d, n, max_order) if _is_reflection(w)]


def parse_window(text: str, d: int) -> WreathElem:
    """Parse ``"0:2,1:1"`` (color:value letters), or ``"2,-1"`` when d <= 2."""
    letters = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            raise ValueError(f"malformed window word {text!r}")
        if ":" in tok:
            k, j = tok.split(":")
            letters.append((int(k), int(j)))
        else:
            j = int(tok)
            if j < 0:
                if d != 2:
                    raise ValueError("signed shorthand is only valid for d = 2")
                letters.append((1, -j))
            else:
                letters.append((0, j))
    for k, _ in letters:
        if not 0 <= k < d:
            raise ValueError(f"color {k} out of range for d={d}")
    return WreathElem.from_letters(d, letters)


def format_window(w: WreathElem) -> str:
    if w.d <= 2:
        return ",".join(str(-j if k else j) for k, j in w.letters())
    return ",".join(f"{k}:{j}" for k, j in w.letters())
