import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bimahonian.cyclotomic import CycloNum, root_of_unity
from bimahonian.errors import InexactDivision
from bimahonian.poly import (
    BiPoly,
    TruncSeries,
    eval_at_root_exponents,
    eval_at_roots,
    exact_div,
    is_palindromic,
    q_integer,
    qpochhammer,
    reduce_mod_cyclic,
)

t = BiPoly.monomial(1, 0)
q = BiPoly.monomial(0, 1)

S3 = 1 + t * q + t * q ** 2 + t ** 2 * q + t ** 2 * q ** 2 + t ** 3 * q ** 3


@st.composite
def small_poly(draw, max_deg=3):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)),
        st.integers(-4, 4), max_size=6))
    return BiPoly(terms)


def test_arith_examples():
    assert (1 + t * q) * (1 - t * q) == 1 - t ** 2 * q ** 2
    assert (1 + q) * (1 + q + q ** 2) == BiPoly.univariate([1, 2, 2, 1])
    assert S3 + BiPoly() == S3


def test_no_zero_terms_stored():
    p = (1 + q) - q
    assert p.terms == {(0, 0): 1}
    assert BiPoly({(1, 1): 0}).is_zero()


def test_exact_div_examples():
    assert exact_div(1 - q ** 4, 1 - q) == BiPoly.univariate([1, 1, 1, 1])
    lhs = exact_div(qpochhammer(4), qpochhammer(0) * (1 - q ** 2) ** 2)
    assert lhs == (1 - q) * (1 - q ** 3) * (1 + q ** 2)
    with pytest.raises(InexactDivision) as info:
        exact_div(1 + q, 1 - q)
    assert not info.value.remainder.is_zero()
    with pytest.raises(ZeroDivisionError):
        exact_div(q, BiPoly())


def test_qpochhammer_examples():
    assert qpochhammer(0) == 1
    assert qpochhammer(2, "q") == BiPoly.univariate([1, -1, -1, 1])
    assert qpochhammer(1, "t") == 1 - t


@pytest.mark.parametrize("n", range(8))
def test_qpochhammer_shape(n):
    p = qpochhammer(n)
    assert p.degree_q == n * (n + 1) // 2
    assert p.coeff(0, 0) == 1


def test_eval_examples():
    z3 = root_of_unity(3)
    assert eval_at_roots(1 + t * q, z3, z3 ** 2) == 2
    assert eval_at_roots(S3, z3, z3) == 3
    assert eval_at_roots(S3, 1, 1) == 6


def test_eval_with_non_root_arguments():
    x = 1 + root_of_unity(5)
    assert eval_at_roots(t * q + 2, x, 3) == 3 * x + 2


def test_reduce_examples():
    assert reduce_mod_cyclic(t ** 3 * q ** 3, 3, 3) == 1
    assert reduce_mod_cyclic(S3, 3, 3) == 2 + t * q + t * q ** 2 + t ** 2 * q + t ** 2 * q ** 2
    assert reduce_mod_cyclic(BiPoly.const(5), 4, 7) == 5


def test_palindromic_examples():
    assert is_palindromic(1 + t * q, 1)
    assert not is_palindromic(1 + t ** 2 * q + t * q ** 2, 3)
    assert is_palindromic(1 + t * q + t ** 2 * q ** 2, 2)


def test_series_examples():
    b = (0, 3, 0)
    r = TruncSeries.from_poly(b, 1 - q).reciprocal()
    assert r.to_poly() == BiPoly.univariate([1, 1, 1, 1])
    b = (2, 2, 2)
    one_minus = TruncSeries(b, {(0, 0, 0): 1, (1, 1, 1): -1})
    assert one_minus.reciprocal() == TruncSeries(b, {(0, 0, 0): 1, (1, 1, 1): 1, (2, 2, 2): 1})
    s = TruncSeries.from_poly((0, 3, 0), 1 - q)
    assert s * s.reciprocal() == TruncSeries.one((0, 3, 0))


def test_series_truncation():
    s = TruncSeries.from_poly((1, 1, 1), (1 + t) * (1 + q))
    assert (s * s).coeff(2, 0, 0) == 0
    assert all(i <= 1 and j <= 1 and k <= 1 for i, j, k in (s * s).terms)


def test_series_noninvertible():
    with pytest.raises(ZeroDivisionError):
        TruncSeries.from_poly((2, 2, 0), q).reciprocal()


@given(small_poly(), small_poly())
def test_exact_div_roundtrip(p, r):
    if r.is_zero():
        return
    assert exact_div(p * r, r) == p


@given(small_poly(), st.integers(1, 5), st.integers(1, 5), st.integers(0, 29), st.integers(0, 29))
def test_reduction_preserves_root_values(p, k, ell, a, b):
    m = 30 if 30 % k == 0 and 30 % ell == 0 else k * ell
    ea = (a % k) * (m // k)
    eb = (b % ell) * (m // ell)
    red = reduce_mod_cyclic(p, k, ell)
    assert red.degree_t < k and red.degree_q < ell
    assert eval_at_root_exponents(red, m, ea, eb) == eval_at_root_exponents(p, m, ea, eb)


@given(small_poly(), st.integers(1, 6), st.integers(0, 5), st.integers(0, 5))
def test_fast_eval_matches_powers(p, m, a, b):
    x, y = root_of_unity(m, a), root_of_unity(m, b)
    slow = CycloNum.zero(m)
    for (i, j), c in p.terms.items():
        slow = slow + (x ** i) * (y ** j) * c
    assert eval_at_roots(p, x, y) == slow


@given(small_poly(max_deg=2), small_poly(max_deg=2))
@settings(max_examples=40)
def test_series_reciprocal_two_sided(p, r):
    b = (3, 3, 0)
    s = TruncSeries.from_poly(b, 1 + t * p + q * r)
    inv = s.reciprocal()
    assert s * inv == TruncSeries.one(b)
    assert inv * s == TruncSeries.one(b)


@given(small_poly())
def test_json_roundtrip(p):
    doc = json.loads(json.dumps(p.to_json()))
    assert BiPoly.from_json(doc) == p
    keys = [(i, j) for i, j, _ in doc["terms"]]
    assert keys == sorted(keys)


def test_json_golden():
    doc = ((1 + q) * (1 + t * q)).to_json()
    assert json.dumps(doc) == '{"vars": ["t", "q"], "terms": [[0, 0, "1"], [0, 1, "1"], [1, 1, "1"], [1, 2, "1"]]}'


def test_json_cyclotomic_coefficients():
    p = BiPoly.const(root_of_unity(3)) * t
    doc = p.to_json()
    assert doc["terms"] == [[1, 0, {"m": 3, "coeffs": ["0", "1"]}]]
    assert BiPoly.from_json(doc) == p


def test_specialize_and_swap():
    assert S3.specialize(t=1) == BiPoly.univariate([1, 2, 2, 1])
    assert S3.swap() == S3
    assert (t * q ** 2).swap() == t ** 2 * q
    assert q_integer(3) == BiPoly.univariate([1, 1, 1])
    assert (t + 2 * q)(1, 1) == 3


def test_rational_coefficients():
    p = BiPoly.const(Fraction(1, 2)) * q
    assert p * 2 == q
    assert not p.has_integer_coeffs()
    assert (p * 2).has_integer_coeffs()
