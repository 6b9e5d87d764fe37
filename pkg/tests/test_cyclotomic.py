import cmath
import math
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bimahonian.cyclotomic import (
    CycloNum,
    GaloisAut,
    conj,
    cyclotomic_polynomial,
    embed,
    galois_apply,
    is_fixed_by_conjugation,
    lift,
    mult_order,
    root_exponent,
    root_of_unity,
    totient,
)
from bimahonian.errors import ConductorMismatch
from oracles import complex_close

CONDUCTORS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15]


@st.composite
def cyclo(draw, m=None, nonzero=False):
    if m is None:
        m = draw(st.sampled_from(CONDUCTORS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                           min_size=m, max_size=m))
    x = CycloNum.from_powers(m, coeffs)
    if nonzero and x.is_zero():
        x = x + 1
    return x


@st.composite
def cyclo_pair(draw, nonzero=False):
    m = draw(st.sampled_from(CONDUCTORS))
    return draw(cyclo(m)), draw(cyclo(m, nonzero=nonzero))


def test_root_of_unity_examples():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(4, 2) == -1
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1
    assert root_of_unity(7, 0) == CycloNum.one(7)


def test_arith_examples():
    z5 = root_of_unity(5)
    assert z5 * root_of_unity(5, 4) == 1
    z3 = root_of_unity(3)
    assert (1 + z3) * (1 + z3 ** 2) == 1
    i = root_of_unity(4)
    q = 1 / (1 - i)
    assert q == (1 + i) / 2
    assert q * (1 - i) == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycloNum.one(5) / CycloNum.zero(5)


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        root_of_unity(3) + root_of_unity(4)
    with pytest.raises(ConductorMismatch):
        embed(root_of_unity(3), 4)


def test_embed_examples():
    assert embed(CycloNum.rational(2, -1), 4) == root_of_unity(4, 2)
    assert embed(CycloNum.one(1), 12) == CycloNum.one(12)
    assert embed(root_of_unity(3), 6) == root_of_unity(6, 2)


def test_galois_examples():
    z5 = root_of_unity(5)
    assert galois_apply(GaloisAut(5, 2), z5) == root_of_unity(5, 2)
    x = 3 + 2 * z5 - Fraction(1, 2) * z5 ** 3
    assert galois_apply(GaloisAut(5, -1), x) == conj(x)
    assert complex_close(conj(x).to_complex(), x.to_complex().conjugate())
    assert galois_apply(GaloisAut(5, 1), x) == x


def test_galois_requires_unit():
    with pytest.raises(ValueError):
        GaloisAut(6, 2)


def test_mult_order_examples():
    assert mult_order(CycloNum.one(5)) == 1
    assert mult_order(root_of_unity(6, 3)) == 2
    assert mult_order(root_of_unity(12, 4)) == 3
    assert mult_order(1 + root_of_unity(5)) is None
    assert mult_order(CycloNum.rational(4, 2)) is None
    assert mult_order(-root_of_unity(3)) == 6


def test_is_fixed_by_conjugation_examples():
    z3 = root_of_unity(3)
    assert is_fixed_by_conjugation(z3 + z3 ** 2)
    assert not is_fixed_by_conjugation(z3)
    assert is_fixed_by_conjugation(CycloNum.rational(3, Fraction(7, 2)))


@pytest.mark.parametrize("m", range(1, 25))
def test_cyclotomic_polynomial_vanishes(m):
    phi = cyclotomic_polynomial(m)
    assert len(phi) - 1 == totient(m)
    z = root_of_unity(m)
    acc = CycloNum.zero(m)
    for c in reversed(phi):
        acc = acc * z + c
    assert acc.is_zero()
    # compare with the numerical root
    val = sum(c * cmath.exp(2j * cmath.pi / m) ** k for k, c in enumerate(phi))
    assert abs(val) < 1e-8


@pytest.mark.parametrize("m", CONDUCTORS)
def test_canonical_length(m):
    x = CycloNum.from_powers(m, list(range(3 * m)))
    assert len(x.coeffs) == totient(m)


@given(cyclo_pair(), st.data())
def test_field_axioms(pair, data):
    x, y = pair
    z = data.draw(cyclo(x.m))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@given(cyclo(nonzero=True))
def test_inverse(x):
    assert x * x.inverse() == 1


@given(cyclo_pair())
def test_matches_complex_numbers(pair):
    x, y = pair
    assert complex_close((x * y).to_complex(), x.to_complex() * y.to_complex(), 1e-6)
    assert complex_close((x + y).to_complex(), x.to_complex() + y.to_complex(), 1e-6)


@given(cyclo(), st.data())
def test_galois_is_multiplicative_and_composes(x, data):
    m = x.m
    units = [s for s in range(m) if math.gcd(s, m) == 1]
    a = GaloisAut(m, data.draw(st.sampled_from(units)))
    b = GaloisAut(m, data.draw(st.sampled_from(units)))
    y = data.draw(cyclo(m))
    assert a(x * y) == a(x) * a(y)
    assert a(x + y) == a(x) + a(y)
    assert (a * b)(x) == a(b(x))
    assert a.inverse()(a(x)) == x


@given(cyclo())
def test_norm_like_product_is_real(x):
    assert is_fixed_by_conjugation(x * conj(x))


@given(cyclo_pair(), st.sampled_from([2, 3, 4]))
def test_embed_is_ring_homomorphism(pair, factor):
    x, y = pair
    m2 = x.m * factor
    assert embed(x + y, m2) == embed(x, m2) + embed(y, m2)
    assert embed(x * y, m2) == embed(x, m2) * embed(y, m2)
    assert complex_close(embed(x, m2).to_complex(), x.to_complex(), 1e-6)


def test_embed_injective_on_roots():
    m2 = 12
    images = {embed(root_of_unity(4, a), m2) for a in range(4)}
    assert len(images) == 4


def test_lift_common_conductor():
    a, b = lift(root_of_unity(4), root_of_unity(6))
    assert a.m == b.m == 12


@given(cyclo())
def test_json_roundtrip(x):
    doc = json.loads(json.dumps(x.to_json()))
    assert CycloNum.from_json(doc) == x
    assert all("." not in c for c in doc["coeffs"])


def test_json_form():
    doc = (root_of_unity(3) / 2).to_json()
    assert doc == {"m": 3, "coeffs": ["0", "1/2"]}


@pytest.mark.parametrize("m", CONDUCTORS)
def test_root_exponent(m):
    for e in range(m):
        assert root_exponent(root_of_unity(m, e)) == e
    assert root_exponent(CycloNum.rational(m, 2)) is None


def test_equality_with_rationals():
    assert CycloNum.rational(5, Fraction(3, 4)) == Fraction(3, 4)
    assert root_of_unity(2) == -1
    assert hash(CycloNum.rational(3, 2)) == hash(CycloNum.rational(3, 2))


def test_negative_power():
    z = root_of_unity(7)
    assert z ** -1 == root_of_unity(7, 6)
    assert (2 + z) ** -2 * (2 + z) ** 2 == 1
