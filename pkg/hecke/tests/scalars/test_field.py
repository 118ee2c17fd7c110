import pytest

from hecke.exceptions import ExtensionRequired, FieldMismatch, UnsupportedPrime
from hecke.scalars import Field, get_field, prime_power


def test_prime_field_arithmetic():
    f = get_field(7)
    assert f(3) * f(5) == 1
    assert f(3).inverse() == 5
    assert f(2) - f(5) == 4
    assert -f(1) == 6
    assert f(3) / f(3) == f.one


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        get_field(5).zero.inverse()


def test_f4():
    f = get_field(2, 2)
    assert f.q == 4
    x = f([0, 1])
    assert x * x == f([1, 1])
    assert x**3 == f.one
    assert [e.to_int() for e in f.elements()] == [0, 1, 2, 3]
    assert len(f.units()) == 3


def test_frobenius_fixes_f9():
    f = get_field(3, 2)
    for x in f.elements():
        assert x**9 == x


def test_generator():
    assert get_field(5).generator == 2
    f = get_field(3, 2)
    g = f.generator
    assert len({g**i for i in range(8)}) == 8


def test_to_json_and_str():
    assert get_field(5)(3).to_json() == 3
    f = get_field(2, 2)
    assert f([0, 1]).to_json() == [0, 1]
    assert str(f([1, 1])) == "1 + 1x"
    assert str(f.zero) == "0"


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(5) == (5, 1)
    with pytest.raises(UnsupportedPrime):
        prime_power(6)
    with pytest.raises(UnsupportedPrime):
        prime_power(1)


def test_field_needs_prime():
    with pytest.raises(UnsupportedPrime):
        Field(4)


def test_residue_field_containment():
    assert get_field(2, 2).contains_residue_field(4)
    assert not get_field(2, 1).contains_residue_field(4)
    with pytest.raises(ExtensionRequired) as exc:
        get_field(2, 1).require_residue_field(4)
    assert exc.value.degree == 2
    with pytest.raises(FieldMismatch):
        get_field(3).require_residue_field(4)


def test_mixing_fields_fails():
    with pytest.raises(FieldMismatch):
        get_field(3)(1) + get_field(5)(1)
