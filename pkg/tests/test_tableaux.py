import math

import pytest

from bimahonian.cyclotomic import GaloisAut
from bimahonian.errors import BudgetExceeded, ConductorMismatch
from bimahonian.poly import BiPoly
from bimahonian.tableaux import (
    MultiPartition,
    SkewTableau,
    colored_rsk,
    enumerate_syt,
    fake_degree,
    galois_on_shape,
    galois_on_tableau,
    multipartitions,
    partitions,
    rsk_inverse,
    tableau_statistics,
)
from bimahonian.wreath import WreathElem, enumerate_group, galois_on_element, group_order, word_statistics
from oracles import hook_length_count

q = BiPoly.monomial(0, 1)


def shape(*comps):
    """Components given from lambda^0 upward."""
    return MultiPartition(tuple(tuple(c) for c in comps))


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(n))) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_multipartition_counts():
    # number of d-multipartitions of n: 1, d, d(d+3)/2 ...
    assert len(list(multipartitions(2, 2))) == 5
    assert len(list(multipartitions(3, 2))) == 9
    assert len(set(multipartitions(2, 3))) == len(list(multipartitions(2, 3))) == 10


def test_shape_json():
    lam = MultiPartition.from_json([[1], [2, 1]])
    assert lam.components == ((2, 1), (1,))
    assert lam.to_json() == [[1], [2, 1]]
    assert lam.n == 4
    with pytest.raises(ValueError):
        MultiPartition(((1, 2),))


def test_enumerate_examples():
    assert len(list(enumerate_syt(shape((2, 1))))) == 2
    assert len(list(enumerate_syt(shape((), (1,))))) == 1
    assert len(list(enumerate_syt(shape((1,), (1,))))) == 2
    with pytest.raises(BudgetExceeded):
        list(enumerate_syt(shape((13,))))


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_length(n):
    for p in partitions(n):
        tabs = list(enumerate_syt(MultiPartition.single(p)))
        assert len(tabs) == hook_length_count(p)
        assert len(set(tabs)) == len(tabs)
        assert all(T.is_standard() for T in tabs)


def test_statistics_examples():
    a = tableau_statistics(SkewTableau.single([[1, 2], [3]]))
    assert (sorted(a.des_set), a.maj, a.fmaj) == ([2], 2, 2)
    b = tableau_statistics(SkewTableau.single([[1, 3], [2]]))
    assert (sorted(b.des_set), b.maj, b.fmaj) == ([1], 1, 1)
    (T,) = enumerate_syt(shape((), (1,)))
    c = tableau_statistics(T)
    assert (c.des_set, c.maj, c.fmaj) == (frozenset(), 0, 1)


def test_fake_degree_examples():
    assert fake_degree(shape((3,))) == 1
    assert fake_degree(shape((1, 1, 1))) == q ** 3
    assert fake_degree(shape((2, 1))) == q + q ** 2


@pytest.mark.parametrize("d", range(1, 6))
def test_cyclic_fake_degrees(d):
    # n = 1: the shape with its cell in component k has fake degree q^k
    for k in range(d):
        comps = [()] * d
        comps[k] = (1,)
        assert fake_degree(MultiPartition(tuple(comps))) == q ** k


def test_higher_components_are_lower_rows():
    T = SkewTableau(2, (((1,),), ((2,),)))
    assert tableau_statistics(T).des_set == frozenset({1})
    T = SkewTableau(2, (((2,),), ((1,),)))
    assert tableau_statistics(T).des_set == frozenset()


@pytest.mark.parametrize("d,n", [(1, 4), (1, 5), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_sum_of_squares(d, n):
    total = sum(fake_degree(lam)(1, 1) ** 2 for lam in multipartitions(d, n))
    assert total == group_order(d, n)


def test_rsk_examples():
    e = WreathElem.identity(1, 4)
    P, Q = colored_rsk(e)
    assert P == Q == SkewTableau.single([[1, 2, 3, 4]])
    P, Q = colored_rsk(WreathElem(1, (2, 1), (0, 0)))
    assert P == Q == SkewTableau.single([[1], [2]])
    P, Q = colored_rsk(WreathElem(2, (1,), (1,)))
    assert P == Q and P.shape == shape((), (1,))
    assert rsk_inverse(SkewTableau.single([[1, 2, 3]]), SkewTableau.single([[1, 2, 3]])) == WreathElem.identity(1, 3)


def test_rsk_inverse_shape_mismatch():
    with pytest.raises(ValueError):
        rsk_inverse(SkewTableau.single([[1, 2]]), SkewTableau.single([[1], [2]]))


@pytest.mark.parametrize("d,n", [(d, n) for d in (1, 2, 3) for n in (1, 2, 3, 4)])
def test_rsk_bijection(d, n):
    images = {}
    for w in enumerate_group(d, n):
        P, Q = colored_rsk(w)
        assert P.shape == Q.shape
        assert P.is_standard() and Q.is_standard()
        assert P.shape.sizes() == word_statistics(w).r
        assert rsk_inverse(P, Q) == w
        images[(P, Q)] = w
    assert len(images) == group_order(d, n)
    pairs = sum(len(list(enumerate_syt(lam))) ** 2 for lam in multipartitions(d, n))
    assert pairs == len(images)


@pytest.mark.parametrize("d,n", [(d, n) for d in (1, 2, 3) for n in (1, 2, 3)])
def test_rsk_symmetry_and_statistics(d, n):
    for w in enumerate_group(d, n):
        P, Q = colored_rsk(w)
        wbar_inv = w.conjugate_colors().inverse()
        assert colored_rsk(wbar_inv) == (Q, P)
        ws, qs, ps = word_statistics(w), tableau_statistics(Q), tableau_statistics(P)
        assert ws.des_set == qs.des_set
        assert ws.fmaj == qs.fmaj
        assert ps.fmaj == word_statistics(wbar_inv).fmaj


@pytest.mark.parametrize("d,n", [(d, n) for d in (3, 4, 5) for n in (1, 2, 3)])
def test_rsk_galois_equivariance(d, n):
    for s in range(1, d):
        if math.gcd(s, d) != 1:
            continue
        sigma = GaloisAut(d, s)
        for w in enumerate_group(d, n):
            P, Q = colored_rsk(w)
            assert colored_rsk(galois_on_element(sigma, w)) == (galois_on_tableau(sigma, P),
                                                                galois_on_tableau(sigma, Q))


def test_galois_on_shape_examples():
    lam = shape((2,), (1,))
    assert galois_on_shape(GaloisAut(2, 1), lam) == lam
    assert galois_on_shape(GaloisAut(4, 3), MultiPartition(((), (1,), (), ()))) == MultiPartition(((), (), (), (1,)))
    T = next(enumerate_syt(shape((1,), (1,))))
    assert galois_on_tableau(GaloisAut(1, 0), SkewTableau.single([[1]])) == SkewTableau.single([[1]])
    assert galois_on_tableau(GaloisAut(2, 1), T) == T
    with pytest.raises(ConductorMismatch):
        galois_on_shape(GaloisAut(4, 1), shape((1,), (), ()))


def test_tableau_json():
    T = SkewTableau(2, (((1, 3),), ((2,),)))
    assert T.to_json() == [[[2]], [[1, 3]]]
    assert SkewTableau.from_json(T.to_json()) == T
