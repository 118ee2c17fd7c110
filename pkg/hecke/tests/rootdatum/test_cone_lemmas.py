import pytest

from hecke.exceptions import BadPartition, HeckeException, NotDominant
from hecke.rootdatum import load_datum, verify_cone_lemmas
from hecke.rootdatum.verifiers import DOMINANCE_SQUARE, ORTHOGONAL_CONE


@pytest.mark.parametrize("name", ["GL2", "SL3", "Sp4", "GL3"])
def test_dominance_square_holds(name):
    report = verify_cone_lemmas(load_datum(f"builtin:{name}"), DOMINANCE_SQUARE, 4)
    assert report.passed
    assert report.cases > 0
    assert report.counterexamples == []
    assert report.reading is None


@pytest.mark.parametrize("name", ["SL2xSL2", "GL2xGL2", "SL3"])
def test_orthogonal_cone_holds(name):
    report = verify_cone_lemmas(load_datum(f"builtin:{name}"), ORTHOGONAL_CONE, 4)
    assert report.passed
    assert report.reading == "coroot"


def test_single_partition():
    rd = load_datum("builtin:SL2xSL2")
    report = verify_cone_lemmas(
        rd, ORTHOGONAL_CONE, 3, partition=(frozenset({0}), frozenset({1}))
    )
    assert report.passed
    assert report.datum == "SL2xSL2"


def test_explicit_lambda_must_be_dominant():
    rd = load_datum("builtin:GL2")
    with pytest.raises(NotDominant):
        verify_cone_lemmas(rd, DOMINANCE_SQUARE, 2, alpha=0, lam=(0, 1))


def test_explicit_lambda_must_be_orthogonal():
    rd = load_datum("builtin:SL2xSL2")
    with pytest.raises(BadPartition):
        verify_cone_lemmas(
            rd,
            ORTHOGONAL_CONE,
            2,
            partition=(frozenset({0}), frozenset({1})),
            lam=(1, 1),
        )


def test_bad_bound_and_kind():
    rd = load_datum("builtin:GL2")
    with pytest.raises(HeckeException):
        verify_cone_lemmas(rd, DOMINANCE_SQUARE, 0)
    with pytest.raises(HeckeException):
        verify_cone_lemmas(rd, "triangle", 2)


def test_square_lambda_must_vanish_off_alpha():
    rd = load_datum("builtin:GL3")
    with pytest.raises(BadPartition):
        verify_cone_lemmas(rd, DOMINANCE_SQUARE, 3, alpha=0, lam=(2, 1, 0))
    report = verify_cone_lemmas(rd, DOMINANCE_SQUARE, 3, alpha=0, lam=(1, 0, 0))
    assert report.passed
