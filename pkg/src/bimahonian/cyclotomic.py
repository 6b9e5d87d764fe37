"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element of Q(zeta_m) is stored by its coordinates in the basis
``1, zeta, ..., zeta**(phi(m)-1)``, i.e. as a polynomial in ``zeta`` reduced
modulo the m-th cyclotomic polynomial.  This makes the representation
canonical, so equality is coordinate equality.

Elements of different conductors never mix implicitly; use :func:`embed`
or :func:`lift` to move them into a common field first.  Plain ``int`` and
``Fraction`` values mix freely with any conductor.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import ConductorMismatch

Rational = Union[int, Fraction]

__all__ = [
    "CycloNum",
    "GaloisAut",
    "cyclotomic_polynomial",
    "totient",
    "root_of_unity",
    "embed",
    "lift",
    "galois_apply",
    "conj",
    "mult_order",
    "is_fixed_by_conjugation",
    "root_exponent",
    "primitive_roots",
]


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@functools.lru_cache(maxsize=None)
def totient(m: int) -> int:
    return sum(1 for a in range(1, m + 1) if math.gcd(a, m) == 1)


def _poly_divexact_int(num: list, den: Sequence[int]) -> list:
    # den is monic; coefficient lists are low-degree first
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        out[i - dn] = c
        if c:
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    assert not any(num[:dn]), "cyclotomic division not exact"
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for e in range(1, m):
        if m % e == 0:
            poly = _poly_divexact_int(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def _reduce(m: int, vec: list) -> tuple:
    """Reduce a coefficient vector in powers of zeta_m modulo Phi_m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    vec = list(vec)
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    vec[base + j] -= c * phi[j]
            vec[i] = 0
    vec = vec[:deg] + [0] * (deg - len(vec))
    return tuple(_norm(c) for c in vec)


class CycloNum:
    """An element of Q(zeta_m).

    >>> z = root_of_unity(3, 1)
    >>> z + z * z
    CycloNum(3, [-1, 0])
    """

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: Iterable[Rational]):
        if m < 1:
            raise ValueError("conductor must be positive")
        coeffs = tuple(_norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
                       for c in coeffs)
        if len(coeffs) != totient(m):
            # accept any power vector and reduce it
            coeffs = _reduce(m, list(coeffs))
        self.m = m
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def from_powers(cls, m: int, vec: Sequence[Rational]) -> "CycloNum":
        """Build from coefficients of 1, zeta, zeta**2, ... (any length)."""
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = _reduce(m, list(vec))
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, m: int, value: Rational) -> "CycloNum":
        return cls(m, [value] + [0] * (totient(m) - 1))

    @classmethod
    def zero(cls, m: int) -> "CycloNum":
        return cls.rational(m, 0)

    @classmethod
    def one(cls, m: int) -> "CycloNum":
        return cls.rational(m, 1)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        """Floating-point value; debugging aid only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(complex(c) * z ** a for a, c in enumerate(self.coeffs))

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> Optional["CycloNum"]:
        if isinstance(other, CycloNum):
            if other.m != self.m:
                raise ConductorMismatch(
                    f"conductors {self.m} and {other.m}; embed into a common field first")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self.m, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._raw(self.m, tuple(_norm(a + b) for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum._raw(self.m, tuple(_norm(a - b) for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum._raw(self.m, tuple(_norm(a * other) for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNum.from_powers(self.m, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycloNum.rational(self.m, Fraction(1) / self.coeffs[0])
        # x^{-1} = (product of the other Galois conjugates) / norm(x)
        others = CycloNum.one(self.m)
        for s in range(2, self.m):
            if math.gcd(s, self.m) == 1:
                others = others * galois_apply(GaloisAut(self.m, s), self)
        norm = (self * others).to_rational()
        return others * (Fraction(1) / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            # rational elements hash like the rational they equal
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.m, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycloNum({self.m}, {list(self.coeffs)})"

    def __str__(self):
        parts = []
        for a, c in enumerate(self.coeffs):
            if not c:
                continue
            if a == 0:
                parts.append(str(c))
            else:
                mon = f"z{self.m}" + (f"^{a}" if a > 1 else "")
                parts.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(parts) if parts else "0"

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(Fraction(c)) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> "CycloNum":
        return cls(doc["m"], [Fraction(c) for c in doc["coeffs"]])

    @classmethod
    def _raw(cls, m, coeffs):
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        obj._hash = None
        return obj


@dataclass(frozen=True)
class GaloisAut:
    """The automorphism zeta_m -> zeta_m**s of Q(zeta_m)."""

    m: int
    s: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("conductor must be positive")
        s = self.s % self.m
        if math.gcd(s, self.m) != 1:
            raise ValueError(f"s={self.s} is not a unit modulo {self.m}")
        object.__setattr__(self, "s", s)

    def __mul__(self, other: "GaloisAut") -> "GaloisAut":
        """Composition: ``(a * b)(x) == a(b(x))``."""
        if other.m != self.m:
            raise ConductorMismatch("composing automorphisms of different fields")
        return GaloisAut(self.m, self.s * other.s)

    def inverse(self) -> "GaloisAut":
        return GaloisAut(self.m, pow(self.s, -1, self.m) if self.m > 1 else 0)

    def restrict(self, m: int) -> "GaloisAut":
        """Restriction to a subfield Q(zeta_m), m dividing the conductor."""
        if self.m % m:
            raise ConductorMismatch(f"{m} does not divide conductor {self.m}")
        return GaloisAut(m, self.s % m)

    def __call__(self, x):
        return galois_apply(self, x)

    @classmethod
    def identity(cls, m: int) -> "GaloisAut":
        return cls(m, 1)

    @classmethod
    def conjugation(cls, m: int) -> "GaloisAut":
        return cls(m, -1)

    @classmethod
    def all(cls, m: int) -> list:
        return [cls(m, s) for s in range(max(m, 1)) if math.gcd(s, m) == 1]


def root_of_unity(m: int, a: int = 1) -> CycloNum:
    """zeta_m ** a in canonical form."""
    if m < 1:
        raise ValueError("conductor must be positive")
    vec = [0] * m
    vec[a % m] = 1
    return CycloNum.from_powers(m, vec)


def embed(x, m2: int) -> CycloNum:
    """Represent ``x`` inside Q(zeta_m2); its conductor must divide m2."""
    if isinstance(x, (int, Fraction)):
        return CycloNum.rational(m2, x)
    if m2 % x.m:
        raise ConductorMismatch(f"conductor {x.m} does not divide {m2}")
    if m2 == x.m:
        return x
    step = m2 // x.m
    vec = [0] * (step * (len(x.coeffs) - 1) + 1)
    for a, c in enumerate(x.coeffs):
        vec[a * step] = c
    return CycloNum.from_powers(m2, vec)


def lift(*xs) -> list:
    """Embed all arguments into the field of the lcm of their conductors."""
    m = 1
    for x in xs:
        if isinstance(x, CycloNum):
            m = math.lcm(m, x.m)
    return [embed(x, m) for x in xs]


def galois_apply(sigma: GaloisAut, x):
    """Apply ``sigma`` to ``x``; the conductor of ``x`` must divide sigma's."""
    if isinstance(x, (int, Fraction)):
        return x
    if sigma.m % x.m:
        raise ConductorMismatch(
            f"element conductor {x.m} does not divide automorphism conductor {sigma.m}")
    s = sigma.s % x.m
    if s == 1 % x.m:
        return x
    vec = [0] * x.m
    for a, c in enumerate(x.coeffs):
        if c:
            vec[(a * s) % x.m] += c
    return CycloNum.from_powers(x.m, vec)


def conj(x):
    """Complex conjugation."""
    if isinstance(x, (int, Fraction)):
        return x
    return galois_apply(GaloisAut(x.m, -1), x)


def mult_order(x) -> Optional[int]:
    """Least k >= 1 with x**k == 1, or None if x is not a root of unity."""
    if isinstance(x, (int, Fraction)):
        return {1: 1, -1: 2}.get(x)
    if x.is_zero():
        return None
    # roots of unity in Q(zeta_m) all have order dividing lcm(2, m)
    bound = math.lcm(2, x.m)
    p = x
    for k in range(1, bound + 1):
        if p == 1:
            return k
        p = p * x
    return None


def is_fixed_by_conjugation(x) -> bool:
    return conj(x) == x


@functools.lru_cache(maxsize=None)
def _root_table(m: int) -> dict:
    return {root_of_unity(m, e).coeffs: e for e in range(m)}


def root_exponent(x) -> Optional[int]:
    """The e with x == zeta_m**e (m the conductor of x), or None."""
    if isinstance(x, (int, Fraction)):
        return 0 if x == 1 else None
    return _root_table(x.m).get(x.coeffs)


def primitive_roots(ell: int) -> list:
    """All primitive ell-th roots of unity, as elements of Q(zeta_ell)."""
    return [root_of_unity(ell, a) for a in range(ell) if math.gcd(a, ell) == 1]
