import pytest

from hecke.exceptions import CorootNotContained, NoIntegralLift
from hecke.rootdatum import (
    dominance_leq,
    fundamental_weight,
    in_orthogonal_sublattice,
    is_derived_simply_connected,
    levi_datum,
    load_datum,
    lowest_weight_window,
    lowest_weights_equivalent,
    orthogonal_partitions,
    orthogonal_sublattice,
    probe_cocharacter,
    sub_datum,
)


def test_simply_connected():
    assert is_derived_simply_connected(load_datum("builtin:GL2"))
    assert is_derived_simply_connected(load_datum("builtin:SL2"))
    assert not is_derived_simply_connected(load_datum("builtin:PGL2"))


def test_gl2_fundamental_weight_and_probe():
    rd = load_datum("builtin:GL2")
    assert fundamental_weight(rd, 0) == (1, 0)
    assert probe_cocharacter(rd, 0) == (1, 0)


def test_fundamental_weights_pair_to_delta():
    rd = load_datum("builtin:Sp4")
    for alpha in rd.indices:
        omega = fundamental_weight(rd, alpha)
        assert [rd.pairing(omega, c) for c in rd.simple_coroots] == [
            int(beta == alpha) for beta in rd.indices
        ]


def test_pgl2_has_no_fundamental_weight():
    with pytest.raises(NoIntegralLift):
        fundamental_weight(load_datum("builtin:PGL2"), 0)


def test_probe_is_orthogonal_to_other_roots():
    rd = load_datum("builtin:GL3")
    for alpha in rd.indices:
        lam = probe_cocharacter(rd, alpha)
        assert rd.is_dominant(lam)
        assert rd.pairing(lam, rd.simple_roots[alpha]) > 0
        for beta in rd.indices:
            if beta != alpha:
                assert rd.pairing(lam, rd.simple_roots[beta]) == 0


def test_dominance_order_gl2():
    rd = load_datum("builtin:GL2")
    assert dominance_leq(rd, (0, 1), (1, 0))
    assert dominance_leq(rd, (1, 0), (1, 0))
    assert not dominance_leq(rd, (1, 0), (0, 1))
    assert not dominance_leq(rd, (1, 1), (1, 0))


def test_orthogonal_partitions():
    assert len(orthogonal_partitions(load_datum("builtin:SL2xSL2"))) == 4
    pairs = orthogonal_partitions(load_datum("builtin:SL3"))
    assert pairs == [(frozenset(), frozenset({0, 1})), (frozenset({0, 1}), frozenset())]


def test_orthogonal_sublattice():
    rd = load_datum("builtin:GL3")
    basis = orthogonal_sublattice(rd, [0])
    assert basis == ((1, 1, 0), (0, 0, 1))
    assert in_orthogonal_sublattice(rd, [0], (2, 2, 7))
    assert not in_orthogonal_sublattice(rd, [0], (1, 0, 0))


def test_levi_datum_keeps_rank():
    rd = load_datum("builtin:GL3")
    levi = levi_datum(rd, [1])
    assert levi.rank == 3
    assert levi.simple_roots == ((0, 1, -1),)


def test_sub_datum_in_coordinates():
    rd = load_datum("builtin:GL2")
    sub = sub_datum(rd, ((1, 0), (1, 1)))
    assert sub.simple_coroots == ((2, -1),)
    assert sub.simple_roots == ((1, 0),)


def test_sub_datum_requires_coroots():
    rd = load_datum("builtin:GL2")
    with pytest.raises(CorootNotContained):
        sub_datum(rd, ((1, 1),))


def test_lowest_weight_window():
    rd = load_datum("builtin:GL2")
    assert lowest_weight_window(rd, (0, 1), 3)
    assert lowest_weight_window(rd, (0, 0), 3)
    assert not lowest_weight_window(rd, (0, 3), 3)
    assert not lowest_weight_window(rd, (1, 0), 3)


def test_lowest_weights_equivalent():
    rd = load_datum("builtin:GL2")
    assert lowest_weights_equivalent(rd, (0, 0), (2, 2), 3)
    assert not lowest_weights_equivalent(rd, (0, 0), (2, 0), 3)
    assert not lowest_weights_equivalent(rd, (0, 0), (1, 1), 3)
