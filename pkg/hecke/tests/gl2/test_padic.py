import math
from fractions import Fraction

import pytest

from common.testing import random_k_entries, seeded_random
from hecke.exceptions import HeckeException, NotDominant
from hecke.gl2 import (
    PAdicMatrix,
    cartan_decompose,
    cartan_decomposition,
    coset_canonicalize,
    coset_decompose,
    double_coset_points,
)
from hecke.gl2.padic import diag, dominant_below, identity, residue, valuation


def _random_k(rng, p):
    return PAdicMatrix(*random_k_entries(rng, p), p)


def _random_g(rng, p):
    e1, e2 = rng.randint(-2, 2), rng.randint(-2, 2)
    return _random_k(rng, p) @ diag(p, e1, e2) @ _random_k(rng, p)


def test_valuation():
    assert valuation(Fraction(9, 2), 3) == 2
    assert valuation(Fraction(1, 6), 2) == -1
    assert valuation(7, 3) == 0
    assert valuation(0, 5) == math.inf


def test_residue():
    assert residue(Fraction(1, 2), 3) == 2
    assert residue(-1, 5) == 4
    with pytest.raises(HeckeException):
        residue(Fraction(1, 3), 3)


def test_singular_rejected():
    with pytest.raises(HeckeException):
        PAdicMatrix.of([[1, 2], [2, 4]], 3)


def test_inverse():
    g = PAdicMatrix.of([[3, 1], [Fraction(1, 3), 2]], 3)
    assert g @ g.inverse() == identity(3)


def test_membership_in_k():
    assert PAdicMatrix.of([[1, 1], [0, 1]], 3).in_k()
    assert not PAdicMatrix.of([[3, 0], [0, 1]], 3).in_k()
    assert not PAdicMatrix.of([[Fraction(1, 3), 0], [0, 3]], 3).in_k()
    assert PAdicMatrix.of([[Fraction(1, 2), 0], [1, 1]], 3).reduce() == (2, 0, 1, 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_coset_decompose(p):
    rng = seeded_random()
    for _ in range(40):
        g = _random_g(rng, p)
        rep, k = coset_decompose(g)
        assert rep @ k == g
        assert k.in_k()
        assert rep.c == 0
        a, d = valuation(rep.a, p), valuation(rep.d, p)
        assert rep.a == Fraction(p)**a and rep.d == Fraction(p)**d
        assert 0 <= rep.b < rep.a


@pytest.mark.parametrize("p", [2, 3])
def test_coset_representative_is_canonical(p):
    rng = seeded_random(7)
    for _ in range(25):
        g = _random_g(rng, p)
        assert coset_canonicalize(g @ _random_k(rng, p)) == coset_canonicalize(g)


def test_distinct_and_equal_cosets():
    p = 3
    assert coset_canonicalize(PAdicMatrix.of([[p, 0], [0, 1]], p)) != coset_canonicalize(
        PAdicMatrix.of([[p, 1], [0, 1]], p)
    )
    assert coset_canonicalize(PAdicMatrix.of([[1, 0], [0, p]], p)) == coset_canonicalize(
        PAdicMatrix.of([[1, 1], [0, p]], p)
    )


def test_cartan_decompose():
    p = 3
    assert cartan_decompose(PAdicMatrix.of([[p, 1], [0, 1]], p)) == (1, 0)
    assert cartan_decompose(diag(p, 0, 2)) == (2, 0)
    assert cartan_decompose(PAdicMatrix.of([[0, Fraction(1, p)], [p, 0]], p)) == (1, -1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_cartan_decomposition(p):
    rng = seeded_random(11)
    for _ in range(40):
        g = _random_g(rng, p)
        k2, (a, b), k1 = cartan_decomposition(g)
        assert a >= b
        assert k2.in_k() and k1.in_k()
        assert k2 @ diag(p, a, b) @ k1 == g


@pytest.mark.parametrize(
    "lam,p,count",
    [((1, 0), 3, 4), ((1, 0), 5, 6), ((2, 0), 2, 6), ((2, 0), 3, 12), ((1, 1), 3, 1)],
)
def test_double_coset_points(lam, p, count):
    points = double_coset_points(lam, p)
    assert len(points) == count
    assert len(set(points)) == count
    for g in points:
        assert cartan_decompose(g) == lam
        assert coset_canonicalize(g) == g


def test_double_coset_points_need_dominance():
    with pytest.raises(NotDominant):
        double_coset_points((0, 1), 3)


def test_dominant_below():
    assert list(dominant_below((2, 0))) == [(2, 0), (1, 1)]
    assert list(dominant_below((3, 0))) == [(3, 0), (2, 1)]
    assert list(dominant_below((1, 1))) == [(1, 1)]
