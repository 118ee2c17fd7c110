import pytest

from hecke.exceptions import (
    DimensionMismatch,
    InfiniteType,
    InvalidDatum,
    InvalidSubset,
    NonCartan,
)
from hecke.rootdatum import (
    cartan_type,
    datum_violations,
    load_datum,
    mask,
    positive_coroots,
    subsets,
    validate_datum,
    weyl_group_order,
)


def test_sl3_cartan_matrix():
    rd = load_datum("builtin:SL3")
    assert rd.cartan_matrix == ((2, -1), (-1, 2))
    assert rd.semisimple_rank == 2


def test_sp4_cartan_matrix_not_symmetric():
    rd = load_datum("builtin:Sp4")
    assert rd.cartan_matrix == ((2, -1), (-2, 2))


@pytest.mark.parametrize(
    "name,count",
    [("SL2", 1), ("GL2", 1), ("SL3", 3), ("GL3", 3), ("Sp4", 4), ("G2", 6), ("GL4", 6)],
)
def test_positive_root_counts(name, count):
    rd = load_datum(f"builtin:{name}")
    assert len(rd.positive_roots) == count
    assert len(positive_coroots(rd)) == count


def test_positive_roots_sorted_by_height():
    rd = load_datum("builtin:SL3")
    heights = [root.height for root in rd.positive_roots]
    assert heights == sorted(heights)
    highest = rd.positive_roots[-1]
    assert highest.coefficients == (1, 1)
    assert highest.vector == (1, 1)
    assert highest.coroot == (1, 1)


def test_roots_pair_to_two_with_their_coroots():
    for name in ("G2", "Sp4", "GL4"):
        rd = load_datum(f"builtin:{name}")
        for root in rd.positive_roots:
            assert rd.pairing(root.vector, root.coroot) == 2


@pytest.mark.parametrize(
    "name,labels",
    [("G2", ["G2"]), ("Sp4", ["B2"]), ("SL2xSL2", ["A1", "A1"]), ("GL4", ["A3"])],
)
def test_cartan_type(name, labels):
    assert cartan_type(load_datum(f"builtin:{name}")) == labels


@pytest.mark.parametrize(
    "name,order",
    [("G2", 12), ("Sp4", 8), ("GL4", 24), ("SL2xSL2", 4), ("SL3", 6)],
)
def test_weyl_group_order(name, order):
    assert weyl_group_order(load_datum(f"builtin:{name}")) == order


def test_validate_datum_rejects_non_cartan():
    with pytest.raises(NonCartan):
        validate_datum(1, [(1,)], [(1,)])


def test_validate_datum_rejects_affine_type():
    with pytest.raises(InfiniteType) as exc:
        validate_datum(2, [(2, -2), (-2, 2)], [(1, 0), (0, 1)])
    assert exc.value.violations


def test_validate_datum_rejects_bad_shapes():
    with pytest.raises(InvalidDatum) as exc:
        validate_datum(2, [(1, -1, 0)], [(1, -1)])
    assert type(exc.value) is InvalidDatum
    assert exc.value.exit_code == 2


def test_datum_violations_clean_for_gl2():
    found = datum_violations(2, [(1, -1)], [(1, -1)])
    assert found == {"structure": [], "cartan": [], "finite": []}


def test_vectors_must_match_rank():
    rd = load_datum("builtin:GL2")
    assert rd.cocharacter([1, 0]) == (1, 0)
    with pytest.raises(DimensionMismatch):
        rd.weight([1, 0, 0])


def test_subset_out_of_range():
    rd = load_datum("builtin:SL3")
    assert rd.subset([1]) == frozenset({1})
    with pytest.raises(InvalidSubset):
        rd.subset([2])


def test_subsets_ordered_by_mask():
    out = subsets({0, 1})
    assert [mask(s) for s in out] == [0, 1, 2, 3]


def test_dominance_of_cocharacters():
    rd = load_datum("builtin:GL2")
    assert rd.is_dominant((1, 0))
    assert rd.is_dominant((1, 1))
    assert not rd.is_dominant((0, 1))
