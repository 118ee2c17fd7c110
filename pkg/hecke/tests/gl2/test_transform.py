import pytest

from hecke.exceptions import UnsupportedPrime
from hecke.gl2 import (
    FiniteRep,
    HeckeKernel,
    build_kernel,
    convolve,
    hecke_relation_check,
    satake_transform,
    twist_kernel,
    verify_changing_weight_identity,
)
from hecke.satake import MonoidAlgebraElement


def _tau(element, lam, coeff=1):
    return MonoidAlgebraElement.tau(element.datum, element.field, lam, coeff)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_transform_of_trivial_weight_operators(p):
    rep = FiniteRep(0, 0, p)
    unit = satake_transform(HeckeKernel.unit(rep))
    assert unit == MonoidAlgebraElement.one(unit.datum, unit.field)

    s10 = satake_transform(build_kernel(rep, rep, (1, 0)))
    assert s10 == _tau(s10, (1, 0))

    s20 = satake_transform(build_kernel(rep, rep, (2, 0)))
    assert s20 == _tau(s20, (2, 0)) - _tau(s20, (1, 1))

    s11 = satake_transform(build_kernel(rep, rep, (1, 1)))
    assert s11 == _tau(s11, (1, 1))


@pytest.mark.parametrize("p", [2, 3])
def test_transform_is_multiplicative_on_trivial_weight(p):
    rep = FiniteRep(0, 0, p)
    t10 = build_kernel(rep, rep, (1, 0))
    t20 = build_kernel(rep, rep, (2, 0))
    assert satake_transform(convolve(t10, t20)) == satake_transform(t10) * satake_transform(t20)


def test_twist_does_not_change_transform():
    rep = FiniteRep(0, 0, 3)
    t10 = build_kernel(rep, rep, (1, 0))
    assert satake_transform(twist_kernel(t10)) == satake_transform(t10)


@pytest.mark.parametrize("p,m", [(2, 0), (3, 0), (3, 1), (5, 0), (5, 1)])
def test_changing_weight_identity(p, m):
    result = verify_changing_weight_identity(p, m)
    assert result.passed
    assert result.c == 1
    transform = result.transform
    assert transform == _tau(transform, (2, 0)) - _tau(transform, (1, 1))
    assert result.kernel.source == FiniteRep(0, m, p)


def test_changing_weight_report():
    report = verify_changing_weight_identity(3, 0).to_model()
    assert report.c == 1
    assert [t.weight for t in report.terms] == [[2, 0], [1, 1]]
    assert [t.coeff for t in report.terms] == [1, 2]
    assert report.passed


def test_prime_must_be_configured(monkeypatch):
    with pytest.raises(UnsupportedPrime):
        verify_changing_weight_identity(7, 0)
    monkeypatch.setenv("HECKE_HECKE_PRIMES", "2")
    with pytest.raises(UnsupportedPrime):
        verify_changing_weight_identity(3, 0)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_hecke_relation_check(p):
    result = hecke_relation_check(p)
    assert result.relation
    assert result.multiplicative
    assert result.passed
