"""Sparse exact polynomials in t, q and truncated series in t, q, u.

Coefficients are ``int``/``Fraction`` or :class:`CycloNum`.  A polynomial
never stores a zero coefficient.  Rational coefficients are promoted to
cyclotomic ones on contact; two cyclotomic coefficients must share a
conductor (see :func:`bimahonian.cyclotomic.lift`).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from .cyclotomic import CycloNum, embed, lift, root_exponent
from .errors import InexactDivision

__all__ = [
    "BiPoly",
    "TruncSeries",
    "exact_div",
    "qpochhammer",
    "q_integer",
    "eval_at_roots",
    "eval_at_root_exponents",
    "reduce_mod_cyclic",
    "is_palindromic",
]

Exp = Tuple[int, int]


def _is_zero(c) -> bool:
    return not c


def _normc(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class BiPoly:
    """A polynomial in t and q with exact coefficients.

    ``terms`` maps ``(i, j)`` to the coefficient of ``t**i * q**j``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Exp, object]] = None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent {(i, j)}")
                if not _is_zero(c):
                    clean[(int(i), int(j))] = _normc(c)
        self.terms: Dict[Exp, object] = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def univariate(cls, coeffs: Iterable, var: str = "q") -> "BiPoly":
        """From a low-degree-first coefficient list in ``var``."""
        if var == "q":
            return cls({(0, j): c for j, c in enumerate(coeffs)})
        if var == "t":
            return cls({(i, 0): c for i, c in enumerate(coeffs)})
        raise ValueError(f"unknown variable {var!r}")

    # -- queries -----------------------------------------------------------

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), 0)

    @property
    def degree_t(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_q(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def domain(self) -> str:
        if any(isinstance(c, CycloNum) for c in self.terms.values()):
            return "cyclotomic"
        return "rational"

    def is_zero(self) -> bool:
        return not self.terms

    def univariate_coeffs(self, var: str = "q") -> list:
        """Dense coefficient list of a polynomial in a single variable."""
        if var == "q":
            if any(i for i, _ in self.terms):
                raise ValueError("polynomial involves t")
            out = [0] * (self.degree_q + 1)
            for (_, j), c in self.terms.items():
                out[j] = c
        else:
            if any(j for _, j in self.terms):
                raise ValueError("polynomial involves q")
            out = [0] * (self.degree_t + 1)
            for (i, _), c in self.terms.items():
                out[i] = c
        return out

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return BiPoly({e: c * other for e, c in self.terms.items()})
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out: Dict[Exp, object] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return BiPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction, CycloNum)):
            if isinstance(c, (int, Fraction)):
                c = Fraction(c)
            return BiPoly({e: v / c for e, v in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- transformations --------------------------------------------------

    def swap(self) -> "BiPoly":
        """Exchange the roles of t and q."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def map_coeffs(self, f: Callable) -> "BiPoly":
        return BiPoly({e: f(c) for e, c in self.terms.items()})

    def embed(self, m: int) -> "BiPoly":
        """Promote every coefficient into Q(zeta_m)."""
        return self.map_coeffs(lambda c: embed(c, m))

    def rationalize(self) -> "BiPoly":
        """Convert cyclotomic coefficients that are rational to plain rationals."""
        return self.map_coeffs(lambda c: c.to_rational() if isinstance(c, CycloNum) else c)

    def has_integer_coeffs(self) -> bool:
        for c in self.terms.values():
            if isinstance(c, CycloNum):
                if not c.is_rational():
                    return False
                c = c.to_rational()
            if Fraction(c).denominator != 1:
                return False
        return True

    def specialize(self, t=None, q=None) -> "BiPoly":
        """Substitute a constant for t and/or q, keeping the other variable."""
        out: Dict[Exp, object] = {}
        tp, qp = {}, {}
        for (i, j), c in self.terms.items():
            if t is not None:
                if i not in tp:
                    tp[i] = t ** i
                c = c * tp[i]
                i = 0
            if q is not None:
                if j not in qp:
                    qp[j] = q ** j
                c = c * qp[j]
                j = 0
            e = (i, j)
            out[e] = out[e] + c if e in out else c
        return BiPoly(out)

    def __call__(self, t, q):
        return eval_at_roots(self, t, q)

    # -- display / serialization -----------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def __repr__(self):
        return f"BiPoly({dict(self.sorted_terms())})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mon = "*".join(
                x for x in (
                    ("t" + (f"^{i}" if i > 1 else "")) if i else "",
                    ("q" + (f"^{j}" if j > 1 else "")) if j else "",
                ) if x
            )
            if isinstance(c, CycloNum):
                cs = f"({c})"
            else:
                cs = str(c)
            if not mon:
                parts.append(cs)
            elif c == 1:
                parts.append(mon)
            else:
                parts.append(f"{cs}*{mon}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        """Document ``{"vars": ["t","q"], "terms": [[i, j, "coeff"], ...]}``.

        Terms are lexicographic in ``(i, j)``; cyclotomic coefficients are
        written as CycloNum documents.
        """
        terms = []
        for (i, j), c in self.sorted_terms():
            if isinstance(c, CycloNum):
                terms.append([i, j, c.to_json()])
            else:
                terms.append([i, j, str(Fraction(c))])
        return {"vars": ["t", "q"], "terms": terms}

    @classmethod
    def from_json(cls, doc: dict) -> "BiPoly":
        out = {}
        for i, j, c in doc["terms"]:
            out[(i, j)] = CycloNum.from_json(c) if isinstance(c, dict) else Fraction(c)
        return cls(out)


def _as_poly(x) -> Optional[BiPoly]:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction, CycloNum)):
        return BiPoly.const(x)
    return None


def _lex_lead(p: BiPoly) -> Exp:
    return max(p.terms)


def exact_div(p: BiPoly, r: BiPoly) -> BiPoly:
    """Quotient of p by r; raises :class:`InexactDivision` unless r | p."""
    if r.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead = _lex_lead(r)
    lc = r.terms[lead]
    inv_lc = (Fraction(1) / lc) if isinstance(lc, (int, Fraction)) else lc.inverse()
    rem = dict(p.terms)
    quot: Dict[Exp, object] = {}
    li, lj = lead
    while rem:
        e = max(rem)
        c = rem[e]
        if e[0] < li or e[1] < lj:
            raise InexactDivision(BiPoly(rem))
        f = (e[0] - li, e[1] - lj)
        qc = _normc(c * inv_lc)
        quot[f] = qc
        for (i, j), rc in r.terms.items():
            g = (i + f[0], j + f[1])
            v = rem.get(g, 0) - qc * rc
            if _is_zero(v):
                rem.pop(g, None)
            else:
                rem[g] = _normc(v)
    return BiPoly(quot)


def qpochhammer(n: int, var: str = "q") -> BiPoly:
    """(x;x)_n = (1-x)(1-x^2)...(1-x^n) in the variable ``var``."""
    out = BiPoly.one()
    for k in range(1, n + 1):
        out = out * (1 - _x(var, k))
    return out


def q_integer(k: int, var: str = "q") -> BiPoly:
    """[k]_x = 1 + x + ... + x^(k-1)."""
    return BiPoly.univariate([1] * k, var)


def _x(var: str, k: int) -> BiPoly:
    return BiPoly.monomial(k, 0) if var == "t" else BiPoly.monomial(0, k)


def eval_at_root_exponents(p: BiPoly, m: int, a: int, b: int) -> CycloNum:
    """p(zeta_m**a, zeta_m**b) for a polynomial with rational coefficients."""
    acc = [0] * m
    for (i, j), c in p.terms.items():
        acc[(a * i + b * j) % m] += c
    return CycloNum.from_powers(m, acc)


def eval_at_roots(p: BiPoly, a, b) -> CycloNum:
    """Exact value of p at t=a, q=b, computed in a common cyclotomic field."""
    coeffs = [c for c in p.terms.values() if isinstance(c, CycloNum)]
    lifted = lift(a, b, *coeffs)
    a, b = lifted[0], lifted[1]
    m = a.m
    ea, eb = root_exponent(a), root_exponent(b)
    if ea is not None and eb is not None:
        acc = [0] * m
        cyclo = []
        for (i, j), c in p.terms.items():
            if isinstance(c, CycloNum):
                cyclo.append((i, j, embed(c, m)))
            else:
                acc[(ea * i + eb * j) % m] += c
        total = CycloNum.from_powers(m, acc)
        for i, j, c in cyclo:
            vec = [0] * m
            shift = (ea * i + eb * j) % m
            for k, x in enumerate(c.coeffs):
                vec[(k + shift) % m] += x
            total = total + CycloNum.from_powers(m, vec)
        return total
    total = CycloNum.zero(m)
    apow: Dict[int, CycloNum] = {}
    bpow: Dict[int, CycloNum] = {}
    for (i, j), c in p.terms.items():
        if i not in apow:
            apow[i] = a ** i
        if j not in bpow:
            bpow[j] = b ** j
        c = embed(c, m) if isinstance(c, CycloNum) else c
        total = total + apow[i] * bpow[j] * c
    return total


def reduce_mod_cyclic(p: BiPoly, k: int, ell: int) -> BiPoly:
    """Representative of p modulo (t^k - 1, q^ell - 1) with exponents < (k, ell)."""
    out: Dict[Exp, object] = {}
    for (i, j), c in p.terms.items():
        e = (i % k, j % ell)
        out[e] = out[e] + c if e in out else c
    return BiPoly(out)


def is_palindromic(p: BiPoly, N: int) -> bool:
    """Whether t^i q^j and t^(N-i) q^(N-j) carry equal coefficients."""
    for (i, j), c in p.terms.items():
        if i > N or j > N or p.coeff(N - i, N - j) != c:
            return False
    return True


# ---------------------------------------------------------------------------
# truncated series


Exp3 = Tuple[int, int, int]


class TruncSeries:
    """Power series in t, q, u truncated at degrees ``bounds = (Dt, Dq, Du)``."""

    __slots__ = ("bounds", "terms")

    def __init__(self, bounds: Tuple[int, int, int], terms: Optional[Mapping[Exp3, object]] = None):
        self.bounds = tuple(bounds)
        Dt, Dq, Du = self.bounds
        clean = {}
        if terms:
            for (i, j, k), c in terms.items():
                if i <= Dt and j <= Dq and k <= Du and not _is_zero(c):
                    clean[(i, j, k)] = _normc(c)
        self.terms: Dict[Exp3, object] = clean

    @classmethod
    def from_poly(cls, bounds, p: BiPoly, u_degree: int = 0) -> "TruncSeries":
        return cls(bounds, {(i, j, u_degree): c for (i, j), c in p.terms.items()})

    @classmethod
    def one(cls, bounds) -> "TruncSeries":
        return cls(bounds, {(0, 0, 0): 1})

    def _check(self, other: "TruncSeries"):
        if self.bounds != other.bounds:
            raise ValueError(f"truncation bounds differ: {self.bounds} vs {other.bounds}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TruncSeries(self.bounds, out)

    def __neg__(self):
        return TruncSeries(self.bounds, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return TruncSeries(self.bounds, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        Dt, Dq, Du = self.bounds
        out: Dict[Exp3, object] = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                i, j, k = i1 + i2, j1 + j2, k1 + k2
                if i > Dt or j > Dq or k > Du:
                    continue
                e = (i, j, k)
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return TruncSeries(self.bounds, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncSeries":
        """Multiplicative inverse within the truncation bounds."""
        c0 = self.terms.get((0, 0, 0), 0)
        if _is_zero(c0):
            raise ZeroDivisionError("constant term is not invertible")
        inv0 = (Fraction(1) / c0) if isinstance(c0, (int, Fraction)) else c0.inverse()
        Dt, Dq, Du = self.bounds
        rest = [(e, c) for e, c in self.terms.items() if e != (0, 0, 0)]
        out: Dict[Exp3, object] = {}
        # solve coefficients in an order compatible with the componentwise partial order
        for k in range(Du + 1):
            for j in range(Dq + 1):
                for i in range(Dt + 1):
                    if (i, j, k) == (0, 0, 0):
                        out[(0, 0, 0)] = _normc(inv0)
                        continue
                    acc = 0
                    for (a, b, c), v in rest:
                        if a <= i and b <= j and c <= k:
                            w = out.get((i - a, j - b, k - c))
                            if w is not None and not _is_zero(w):
                                acc = acc + v * w
                    if not _is_zero(acc):
                        out[(i, j, k)] = _normc(-acc * inv0)
        return TruncSeries(self.bounds, out)

    def coeff(self, i, j, k):
        return self.terms.get((i, j, k), 0)

    def u_coefficient(self, k: int) -> BiPoly:
        """The coefficient of u**k as a polynomial in t, q."""
        return BiPoly({(i, j): c for (i, j, kk), c in self.terms.items() if kk == k})

    def to_poly(self) -> BiPoly:
        if any(k for _, _, k in self.terms):
            raise ValueError("series involves u")
        return self.u_coefficient(0)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.bounds == other.bounds and self.terms == other.terms

    def __repr__(self):
        return f"TruncSeries({self.bounds}, {dict(sorted(self.terms.items()))})"
