import pytest

from hecke.exceptions import NotDominantOrAntiDominant
from hecke.rootdatum import load_datum, subsets
from hecke.weyl import generate_group
from hecke.weyl.cosets import (
    coset_factorize,
    min_coset_reps,
    stabilizer,
    stabilizer_subset,
    verify_coset_bruhat_lemma,
)


@pytest.fixture
def sl3():
    return generate_group(load_datum("builtin:SL3"))


def test_min_coset_reps_count(sl3):
    assert len(min_coset_reps(sl3, [0])) == 3
    assert len(min_coset_reps(sl3, [])) == 6
    assert min_coset_reps(sl3, [0, 1]) == [sl3.identity]


def test_coset_factorize(sl3):
    for w in sl3:
        w0, w1 = coset_factorize(sl3, w, [0])
        assert sl3.multiply(w0, w1) == w
        assert w0.length + w1.length == w.length
        assert set(w1.word) <= {0}


def test_stabilizer_subset(sl3):
    assert stabilizer_subset(sl3, (0, 0)) == frozenset({0, 1})
    assert stabilizer_subset(sl3, (1, 0)) == frozenset({1})
    assert stabilizer_subset(sl3, (-1, -1)) == frozenset()
    assert len(stabilizer(sl3, (1, 0))) == 2


def test_stabilizer_subset_needs_dominance(sl3):
    with pytest.raises(NotDominantOrAntiDominant):
        stabilizer_subset(sl3, (1, -1))


@pytest.mark.parametrize("name", ["SL3", "Sp4", "G2", "GL3"])
def test_coset_bruhat_lemma(name):
    group = generate_group(load_datum(f"builtin:{name}"))
    for theta in subsets(group.datum.all_simple):
        report = verify_coset_bruhat_lemma(group, theta)
        assert report.passed
        assert report.lemma == "coset-bruhat"
