import pytest

from hecke.exceptions import SearchSpaceTooLarge
from hecke.rootdatum import load_datum
from hecke.satake import (
    brute_force_laurent_factor_search,
    coroot_binomial,
    tau_coroot_minus_one_irreducible,
)


@pytest.mark.parametrize(
    "name,irreducible",
    [("SL2", True), ("GL2", True), ("PGL2", False), ("Sp4", True), ("G2", True)],
)
def test_criterion(name, irreducible):
    rd = load_datum(f"builtin:{name}")
    assert all(
        tau_coroot_minus_one_irreducible(rd, a) == irreducible for a in rd.indices
    )


def test_search_factors_pgl2():
    rd = load_datum("builtin:PGL2")
    element = coroot_binomial(rd, 0, 3)
    found = brute_force_laurent_factor_search(element, 2, 3)
    assert found is not None
    g, h = found
    assert not g.is_unit() and not h.is_unit()
    assert g * h == element.normalized()


def test_search_finds_nothing_for_sl2():
    rd = load_datum("builtin:SL2")
    assert brute_force_laurent_factor_search(coroot_binomial(rd, 0, 3), 2, 3) is None


def test_search_agrees_with_criterion_on_gl2():
    rd = load_datum("builtin:GL2")
    assert brute_force_laurent_factor_search(coroot_binomial(rd, 0, 2), 2, 2) is None


def test_search_cap(monkeypatch):
    monkeypatch.setenv("HECKE_SEARCH_CAP", "1")
    rd = load_datum("builtin:PGL2")
    with pytest.raises(SearchSpaceTooLarge):
        brute_force_laurent_factor_search(coroot_binomial(rd, 0, 3), 2, 3)
