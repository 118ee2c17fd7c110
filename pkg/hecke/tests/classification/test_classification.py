import pytest

from hecke.classification import (
    ClassificationParameter,
    SupersingularDatum,
    build_descriptor,
    character_extends,
    enumerate_parameters,
    induction_factors,
    is_supersingular_descriptor,
    k_type_compatible,
    orthogonality_variants_agree,
    parameter_violations,
    pi_sigma,
    principal_series_analyze,
    supersingular_data_from_model,
    torus_datum,
    trivial_parameter_factors,
)
from hecke.commands import GL3_FIXTURE
from hecke.exceptions import InvalidParameter
from hecke.rootdatum import load_datum, subsets
from hecke.scalars import SmoothCharacter, TorusCharacterDatum, get_field, trivial_character
from hecke.serialize import SupersingularDataModel, load_file


@pytest.fixture
def gl3_data():
    rd = load_datum("builtin:GL3")
    model = load_file(SupersingularDataModel, GL3_FIXTURE)
    return rd, supersingular_data_from_model(rd, model)


def _unit_on_first(q: int, rank: int) -> TorusCharacterDatum:
    f = get_field(q)
    chars = [SmoothCharacter(1, f.one, q)] + [SmoothCharacter.trivial(f, q)] * (rank - 1)
    return TorusCharacterDatum.standard(chars)


def test_fixture_pi_sigma(gl3_data):
    _, data = gl3_data
    by_label = {d.label: pi_sigma(d) for d in data}
    assert by_label == {
        "chi_trivial": frozenset({0, 1}),
        "chi_unit": frozenset({1}),
        "chi_unramified": frozenset({1}),
        "sigma_M0": frozenset(),
        "sigma_M1": frozenset(),
        "sigma_G": frozenset(),
    }


def test_enumeration_is_bijective(gl3_data):
    rd, data = gl3_data
    enumeration = enumerate_parameters(rd, data)
    assert enumeration.expected == 11
    assert len(enumeration.entries) == 11
    assert enumeration.injective


def test_enumeration_order(gl3_data):
    rd, data = gl3_data
    params = [p for p, _ in enumerate_parameters(rd, data).entries]
    assert params == sorted(params, key=ClassificationParameter.sort_key)


def test_relabelled_datum_is_a_new_parameter(gl3_data):
    rd, data = gl3_data
    trivial = data[0]
    copy = SupersingularDatum(rd, trivial.levi, trivial.central_character, "chi_copy")
    enumeration = enumerate_parameters(rd, [trivial, copy])
    assert len(enumeration.entries) == 8
    assert enumeration.injective


def test_supersingular_descriptors(gl3_data):
    rd, data = gl3_data
    entries = enumerate_parameters(rd, data).entries
    supersingular = [d.sigma1_label for _, d in entries if is_supersingular_descriptor(d)]
    assert supersingular == ["sigma_G"]


def test_descriptor_shape(gl3_data):
    rd, data = gl3_data
    trivial = data[0]
    desc = build_descriptor(ClassificationParameter(frozenset(), frozenset({1}), trivial))
    assert desc.inducing_parabolic == frozenset({0, 1})
    assert desc.special_part == frozenset({1})
    assert desc.satake.levi == frozenset()
    model = desc.to_model()
    assert model.pi2 == [1]
    assert not model.supersingular


def test_parameter_violations(gl3_data):
    _, data = gl3_data
    unit = data[1]
    bad = ClassificationParameter(frozenset(), frozenset({0}), unit)
    assert parameter_violations(bad)
    with pytest.raises(InvalidParameter):
        build_descriptor(bad)
    wrong_levi = ClassificationParameter(frozenset({0}), frozenset(), unit)
    assert parameter_violations(wrong_levi)


def test_induction_factors(gl3_data):
    _, data = gl3_data
    trivial = data[0]
    assert [p.pi2 for p in induction_factors([], trivial)] == subsets({0, 1})
    with pytest.raises(InvalidParameter):
        induction_factors([0], trivial)


def test_central_character_lattice_checked():
    rd = load_datum("builtin:GL2")
    f = get_field(3)
    wrong = TorusCharacterDatum(((1, 0),), (SmoothCharacter.trivial(f, 3),), 3, f, 2)
    with pytest.raises(InvalidParameter):
        SupersingularDatum(rd, frozenset({0}), wrong, "bad")

    flipped = TorusCharacterDatum(((-1, -1),), (SmoothCharacter(0, f(2), 3),), 3, f, 2)
    d = SupersingularDatum(rd, frozenset({0}), flipped, "flipped")
    assert d.central_character.basis == ((1, 1),)
    assert d.central_character.chars[0].uniformizer_value == 2


def test_principal_series_gl2():
    rd = load_datum("builtin:GL2")
    analysis = principal_series_analyze(rd, trivial_character(3, 2))
    assert analysis.C == 1
    assert analysis.length == 2
    assert not analysis.irreducible
    assert [sorted(d.special_part) for d in analysis.factors] == [[], [0]]

    generic = principal_series_analyze(rd, _unit_on_first(3, 2))
    assert generic.irreducible
    assert generic.length == 1


def test_principal_series_gl3_trivial():
    analysis = principal_series_analyze(load_datum("builtin:GL3"), trivial_character(2, 3))
    assert analysis.C == 2
    assert len(analysis.factors) == 4


def test_trivial_parameter_factors():
    labels = [d.label for d in trivial_parameter_factors(load_datum("builtin:GL3"))]
    assert labels == ["Steinberg", "Sp_0", "Sp_1", "trivial"]


def test_character_extends():
    rd = load_datum("builtin:GL2")
    f = get_field(5)
    chi = SmoothCharacter(1, f(2), 5)
    assert character_extends(rd, TorusCharacterDatum.standard([chi, chi]))
    assert not character_extends(rd, _unit_on_first(5, 2))


def test_k_type_compatible():
    rd = load_datum("builtin:GL2")
    param = ClassificationParameter(frozenset(), frozenset(), torus_datum(rd, trivial_character(3, 2)))
    assert k_type_compatible(param, (0, 0))
    assert k_type_compatible(param, (2, 0))
    assert not k_type_compatible(param, (0, 1))


@pytest.mark.parametrize("name", ["G2", "Sp4", "GL3", "SL2xSL2"])
def test_orthogonality_variants_agree(name):
    rd = load_datum(f"builtin:{name}")
    assert all(orthogonality_variants_agree(rd, pi1) for pi1 in subsets(rd.all_simple))


def test_datum_mismatch_rejected(gl3_data):
    _, data = gl3_data
    with pytest.raises(InvalidParameter):
        enumerate_parameters(load_datum("builtin:GL2"), data)
