"""
The parameter set P of triples (pi1, pi2, sigma1) and the descriptors of
the irreducible representations I(Lambda) they classify.

Supersingular representations are not constructed. A supersingular
datum records the Levi, the central character and an opaque label, and
distinct labels are taken to be non-isomorphic.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from hecke import lattice
from hecke.exceptions import InvalidParameter
from hecke.rootdatum.datum import ParabolicSubset, RootDatum, mask, subsets
from hecke.rootdatum.geometry import orthogonal_sublattice
from hecke.satake.parameter import SatakeParameter
from hecke.scalars.characters import (
    SmoothCharacter,
    TorusCharacterDatum,
    field_for,
    smooth_from_model,
)
from hecke.serialize import DescriptorModel, SupersingularDataModel

logger = logging.getLogger("hecke.classification")


def _same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return len(a) == len(b) and all(lattice.contains(b, v) for v in a) and all(
        lattice.contains(a, v) for v in b
    )


def orthogonal_to_levi(rd: RootDatum, levi: Iterable[int]) -> ParabolicSubset:
    """
    Simple roots alpha with <beta, coroot_alpha> = 0 for every beta in levi.
    """
    levi = rd.subset(levi)
    cartan = rd.cartan_matrix
    return frozenset(
        a for a in rd.indices if all(cartan[b][a] == 0 for b in levi)
    )


@dataclass(frozen=True)
class SupersingularDatum:
    datum: RootDatum
    levi: ParabolicSubset
    central_character: TorusCharacterDatum
    label: str

    def __post_init__(self):
        object.__setattr__(self, "levi", self.datum.subset(self.levi))
        basis = orthogonal_sublattice(self.datum, self.levi)
        if self.central_character.basis != basis:
            if not _same_lattice(self.central_character.basis, basis):
                raise InvalidParameter([
                    f"central character of {self.label} lives on "
                    f"{list(self.central_character.basis)}, expected X_(M,*,0) = {list(basis)}"
                ])
            object.__setattr__(self, "central_character", self.central_character.rebase(basis))
        for a in orthogonal_to_levi(self.datum, self.levi):
            if not lattice.contains(basis, self.datum.simple_coroots[a]):
                raise InvalidParameter([
                    f"coroot {a} is orthogonal to the levi but not in X_(M,*,0)"
                ])

    @property
    def q(self) -> int:
        return self.central_character.q

    def omega_on_coroot(self, alpha: int) -> SmoothCharacter:
        return self.central_character.compose_with_cocharacter(
            self.datum.simple_coroots[alpha]
        )


def pi_sigma(d: SupersingularDatum) -> ParabolicSubset:
    return frozenset(
        a for a in sorted(orthogonal_to_levi(d.datum, d.levi))
        if d.omega_on_coroot(a).is_trivial()
    )


@dataclass(frozen=True)
class ClassificationParameter:
    pi1: ParabolicSubset
    pi2: ParabolicSubset
    sigma1: SupersingularDatum

    @property
    def datum(self) -> RootDatum:
        return self.sigma1.datum

    def sort_key(self):
        return mask(self.pi1), mask(self.pi2), self.sigma1.label

    def __str__(self) -> str:
        return f"({sorted(self.pi1)}, {sorted(self.pi2)}, {self.sigma1.label})"


def parameter_violations(param: ClassificationParameter) -> list[str]:
    violations = []
    rd = param.datum
    bad = sorted(i for i in param.pi1 | param.pi2 if i not in rd.indices)
    if bad:
        violations.append(f"simple root indices {bad} out of range")
        return violations
    if param.pi1 != param.sigma1.levi:
        violations.append(
            f"pi1 = {sorted(param.pi1)} differs from the levi {sorted(param.sigma1.levi)} "
            f"of {param.sigma1.label}"
        )
    allowed = pi_sigma(param.sigma1)
    if not param.pi2 <= allowed:
        violations.append(
            f"pi2 = {sorted(param.pi2)} is not contained in pi_sigma = {sorted(allowed)}"
        )
    return violations


def validate_parameter(param: ClassificationParameter) -> bool:
    return not parameter_violations(param)


@dataclass(frozen=True)
class IrrRepDescriptor:
    pi1: ParabolicSubset
    inducing_parabolic: ParabolicSubset
    sigma1_label: str
    special_part: ParabolicSubset
    satake: SatakeParameter
    # (alpha, unit exponent, uniformizer value) of omega o coroot_alpha
    # for the coroots orthogonal to pi1.
    central_units: tuple = field(default=())

    def fingerprint(self) -> tuple:
        return (
            mask(self.satake.levi),
            self.satake.values,
            self.central_units,
            mask(self.special_part),
            self.sigma1_label,
        )

    def to_model(self) -> DescriptorModel:
        return DescriptorModel(
            pi1=sorted(self.pi1),
            pi2=sorted(self.special_part),
            label=self.sigma1_label,
            inducing_parabolic=sorted(self.inducing_parabolic),
            special_part=sorted(self.special_part),
            supersingular=is_supersingular_descriptor(self),
            satake=self.satake.to_model(),
        )


def build_descriptor(param: ClassificationParameter) -> IrrRepDescriptor:
    """
    I(Lambda) = Ind_{P_Lambda}(sigma_Lambda) with P_Lambda given by
    pi1 and pi_sigma, special part pi2 and Satake parameter
    (M_pi1, lambda -> omega(lambda(pi))).
    """
    violations = parameter_violations(param)
    if violations:
        raise InvalidParameter(violations)
    d = param.sigma1
    rd = d.datum
    units = tuple(
        (a, chi.unit_exponent, chi.uniformizer_value.to_int())
        for a in sorted(orthogonal_to_levi(rd, d.levi))
        for chi in [d.omega_on_coroot(a)]
    )
    return IrrRepDescriptor(
        pi1=param.pi1,
        inducing_parabolic=param.pi1 | pi_sigma(d),
        sigma1_label=d.label,
        special_part=param.pi2,
        satake=SatakeParameter.from_character(rd, d.levi, d.central_character),
        central_units=units,
    )


def is_supersingular_descriptor(desc: IrrRepDescriptor) -> bool:
    return desc.satake.levi == desc.satake.datum.all_simple


def induction_factors(levi: Iterable[int], d: SupersingularDatum) -> list[ClassificationParameter]:
    """
    Parameters of the graded pieces of Ind_P(sigma) for supersingular sigma
    of M_levi.
    """
    levi = d.datum.subset(levi)
    if levi != d.levi:
        raise InvalidParameter([f"{d.label} is a datum for {sorted(d.levi)}, not {sorted(levi)}"])
    return [ClassificationParameter(levi, pi2, d) for pi2 in subsets(pi_sigma(d))]


@dataclass
class Enumeration:
    entries: list[tuple[ClassificationParameter, IrrRepDescriptor]]
    expected: int
    collisions: list[tuple[int, int]]

    @property
    def injective(self) -> bool:
        return not self.collisions


def enumerate_parameters(rd: RootDatum, data: Sequence[SupersingularDatum]) -> Enumeration:
    params = []
    expected = 0
    for d in data:
        if d.datum != rd:
            raise InvalidParameter([f"{d.label} is a datum for {d.datum.name}, not {rd.name}"])
        factors = induction_factors(d.levi, d)
        expected += 2**len(pi_sigma(d))
        params.extend(factors)
    params.sort(key=ClassificationParameter.sort_key)
    entries = [(p, build_descriptor(p)) for p in params]

    seen: dict[tuple, int] = {}
    collisions = []
    for i, (param, desc) in enumerate(entries):
        key = desc.fingerprint()
        if key in seen:
            logger.warning("%s and %s give the same descriptor", entries[seen[key]][0], param)
            collisions.append((seen[key], i))
        else:
            seen[key] = i
    logger.info("%s: %d parameters from %d supersingular data", rd.name, len(entries), len(data))
    return Enumeration(entries=entries, expected=expected, collisions=collisions)


@dataclass
class PrincipalSeries:
    C: int
    length: int
    factors: list[IrrRepDescriptor]

    @property
    def irreducible(self) -> bool:
        return self.C == 0


def principal_series_analyze(rd: RootDatum, nu: TorusCharacterDatum) -> PrincipalSeries:
    """
    Ind_B(nu) has length 2^C with C the number of simple roots on which
    nu o coroot is trivial; its factors are the I(emptyset, pi2, nu).
    """
    d = SupersingularDatum(rd, frozenset(), nu, "nu")
    trivial_on = pi_sigma(d)
    factors = [build_descriptor(p) for p in induction_factors(frozenset(), d)]
    C = len(trivial_on)
    return PrincipalSeries(C=C, length=2**C, factors=factors)


@dataclass(frozen=True)
class SpecialRepDescriptor:
    parabolic: ParabolicSubset
    label: str


def trivial_parameter_factors(rd: RootDatum) -> list[SpecialRepDescriptor]:
    """
    The factors Sp_P, one for each standard parabolic P.
    """
    out = []
    for subset in subsets(rd.all_simple):
        if subset == rd.all_simple:
            label = "trivial"
        elif not subset:
            label = "Steinberg"
        else:
            label = f"Sp_{''.join(str(i) for i in sorted(subset))}"
        out.append(SpecialRepDescriptor(parabolic=subset, label=label))
    return out


def character_extends(rd: RootDatum, nu: TorusCharacterDatum) -> bool:
    """
    nu extends to a character of G when every nu o coroot is trivial.
    """
    return all(nu.compose_with_cocharacter(c).is_trivial() for c in rd.simple_coroots)


def k_type_compatible(param: ClassificationParameter, nu: Sequence[int]) -> bool:
    """
    Necessary for Hom_K(V_nu, I(Lambda)) to be nonzero: omega o coroot and
    nu o coroot agree on O^x for every coroot orthogonal to pi1.
    """
    d = param.sigma1
    rd = d.datum
    nu = rd.weight(nu)
    for a in sorted(orthogonal_to_levi(rd, d.levi)):
        exponent = lattice.dot(nu, rd.simple_coroots[a]) % (d.q - 1)
        if d.omega_on_coroot(a).unit_exponent != exponent:
            return False
    return True


def orthogonality_variants_agree(rd: RootDatum, pi1: Iterable[int]) -> bool:
    """
    <beta, coroot_alpha> = 0 and <alpha, coroot_beta> = 0 for all beta in
    pi1 pick out the same simple roots.
    """
    pi1 = rd.subset(pi1)
    cartan = rd.cartan_matrix
    by_coroot = orthogonal_to_levi(rd, pi1)
    by_root = frozenset(a for a in rd.indices if all(cartan[a][b] == 0 for b in pi1))
    return by_coroot == by_root


def supersingular_data_from_model(rd: RootDatum,
                                  model: SupersingularDataModel) -> list[SupersingularDatum]:
    out = []
    for entry in model.data:
        levi = rd.subset(entry.levi)
        basis = entry.basis or [list(v) for v in orthogonal_sublattice(rd, levi)]
        field = field_for(model.q, model.field_degree)
        character = TorusCharacterDatum(
            tuple(tuple(v) for v in basis),
            tuple(smooth_from_model(c, field, model.q) for c in entry.basis_chars),
            model.q,
            field,
            rd.rank,
        )
        out.append(SupersingularDatum(rd, levi, character, entry.label))
    return out


def torus_datum(rd: RootDatum, nu: TorusCharacterDatum,
                label: Optional[str] = None) -> SupersingularDatum:
    return SupersingularDatum(rd, frozenset(), nu, label or "nu")

