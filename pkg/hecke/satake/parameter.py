"""
Satake parameters: algebra homomorphisms k[X_*,+] -> k given by a
standard Levi M and a character chi_M of X_{M,*,0}.

chi(tau_lambda) is chi_M(lambda) when lambda is orthogonal to the roots
of M and 0 otherwise.
"""
import itertools
import logging
from typing import Callable, Iterable, Iterator, Optional, Sequence

from hecke import lattice
from hecke.exceptions import (
    FieldMismatch,
    InconsistentOracle,
    InvalidSatakeParameter,
    NotDominant,
    NotInLattice,
)
from hecke.rootdatum.datum import Cocharacter, ParabolicSubset, RootDatum, subsets
from hecke.rootdatum.geometry import (
    in_orthogonal_sublattice,
    orthogonal_sublattice,
    probe_cocharacter,
    sub_datum,
)
from hecke.satake.algebra import MonoidAlgebraElement
from hecke.scalars.characters import TorusCharacterDatum
from hecke.scalars.field import Field, FieldElement
from hecke.serialize import SatakeBasisValueModel, SatakeParameterModel

logger = logging.getLogger("hecke.satake")

Oracle = Callable[[Cocharacter], FieldElement]


class SatakeParameter:
    def __init__(self, datum: RootDatum, levi: Iterable[int],
                 values: Sequence[FieldElement], field: Optional[Field] = None):
        self.datum = datum
        self.levi: ParabolicSubset = datum.subset(levi)
        self.basis = orthogonal_sublattice(datum, self.levi)
        if len(values) != len(self.basis):
            raise InvalidSatakeParameter(
                f"{len(values)} values for a lattice of rank {len(self.basis)}"
            )
        self.values = tuple(values)
        if field is None:
            if not self.values:
                raise InvalidSatakeParameter(
                    f"X_(M,*,0) is zero for {sorted(self.levi)}; a field must be given"
                )
            field = self.values[0].field
        self.field: Field = field
        for v in self.values:
            self.field.check(v)
            if v.is_zero():
                raise InvalidSatakeParameter(
                    f"chi_M takes the value 0 on {self.basis[self.values.index(v)]}"
                )

    @classmethod
    def from_character(cls, datum: RootDatum, levi: Iterable[int],
                       nu: TorusCharacterDatum) -> "SatakeParameter":
        """
        (M, lambda -> nu(lambda(pi))) for a character nu defined at least on
        X_{M,*,0}.
        """
        levi = datum.subset(levi)
        basis = orthogonal_sublattice(datum, levi)
        return cls(datum, levi, [nu.uniformizer_value(b) for b in basis], nu.field)

    @classmethod
    def trivial(cls, datum: RootDatum, field: Field,
                levi: Optional[Iterable[int]] = None) -> "SatakeParameter":
        levi = datum.all_simple if levi is None else datum.subset(levi)
        return cls(datum, levi, [field.one] * len(orthogonal_sublattice(datum, levi)), field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SatakeParameter):
            return NotImplemented
        return (self.datum, self.field, self.levi, self.values) == (
            other.datum,
            other.field,
            other.levi,
            other.values,
        )

    def __hash__(self) -> int:
        return hash((self.datum, self.levi, self.values))

    def __repr__(self) -> str:
        values = ", ".join(f"{list(b)}: {v}" for b, v in zip(self.basis, self.values))
        return f"SatakeParameter({self.datum.name}, M={sorted(self.levi)}, {{{values}}})"

    def character_value(self, lam: Sequence[int]) -> FieldElement:
        """
        chi_M(lambda) for any lambda in X_{M,*,0}, dominant or not.
        """
        coords = lattice.coordinates(self.basis, lam)
        if coords is None:
            raise NotInLattice(f"{list(lam)} is not in X_(M,*,0) for M={sorted(self.levi)}")
        value = self.field.one
        for n, v in zip(coords, self.values):
            if n:
                value = value * v**n
        return value

    def evaluate(self, lam: Sequence[int]) -> FieldElement:
        lam = self.datum.cocharacter(lam)
        if not self.datum.is_dominant(lam):
            raise NotDominant(f"{list(lam)} is not dominant for {self.datum.name}")
        if not in_orthogonal_sublattice(self.datum, self.levi, lam):
            return self.field.zero
        return self.character_value(lam)

    def evaluate_element(self, element: MonoidAlgebraElement) -> FieldElement:
        total = self.field.zero
        for lam, c in element.terms.items():
            total = total + c * self.evaluate(lam)
        return total

    def to_model(self) -> SatakeParameterModel:
        return SatakeParameterModel(
            levi=sorted(self.levi),
            chi_basis=[
                SatakeBasisValueModel(lattice_vector=list(b), pi_value=v.to_json())
                for b, v in zip(self.basis, self.values)
            ],
        )


def evaluate(chi: SatakeParameter, lam: Sequence[int]) -> FieldElement:
    return chi.evaluate(lam)


def evaluate_element(chi: SatakeParameter, element: MonoidAlgebraElement) -> FieldElement:
    return chi.evaluate_element(element)


def dominant_box(rd: RootDatum, bound: int) -> Iterator[Cocharacter]:
    for lam in itertools.product(range(-bound, bound + 1), repeat=rd.rank):
        if rd.is_dominant(lam):
            yield lam


def is_algebra_homomorphism_consistent(chi: SatakeParameter, bound: int) -> bool:
    """
    chi(tau_0) = 1 and chi(tau_lam tau_mu) = chi(tau_lam) chi(tau_mu) on
    the dominant points of [-bound, bound]^n.
    """
    rd = chi.datum
    if not chi.evaluate((0,) * rd.rank).is_one():
        return False
    box = list(dominant_box(rd, bound))
    values = {lam: chi.evaluate(lam) for lam in box}
    for lam, mu in itertools.product(box, repeat=2):
        total = tuple(a + b for a, b in zip(lam, mu))
        if chi.evaluate(total) != values[lam] * values[mu]:
            logger.warning("%s is not multiplicative at %s, %s", chi, lam, mu)
            return False
    return True


def all_parameters(rd: RootDatum, field: Field) -> Iterator[SatakeParameter]:
    """
    Every parameter whose chi_M takes values in F^x on the basis of
    X_{M,*,0}, Levis in bitmask order.
    """
    units = field.units()
    for levi in subsets(rd.all_simple):
        rank = len(orthogonal_sublattice(rd, levi))
        for values in itertools.product(units, repeat=rank):
            yield SatakeParameter(rd, levi, values, field)


def _check_compatible(chi1: SatakeParameter, chi2: SatakeParameter):
    if chi1.datum != chi2.datum or chi1.field != chi2.field:
        raise FieldMismatch(
            f"parameters over {chi1.datum.name}/{chi1.field} and "
            f"{chi2.datum.name}/{chi2.field} cannot be combined"
        )


def tensor(chi1: SatakeParameter, chi2: SatakeParameter) -> SatakeParameter:
    """
    Parameter of tau_lambda -> chi1(tau_lambda) chi2(tau_lambda). It
    vanishes off X_{M1,*,0} and off X_{M2,*,0}, so its Levi is generated
    by both sets of simple roots.
    """
    _check_compatible(chi1, chi2)
    levi = chi1.levi | chi2.levi
    basis = orthogonal_sublattice(chi1.datum, levi)
    return SatakeParameter(
        chi1.datum,
        levi,
        [chi1.character_value(b) * chi2.character_value(b) for b in basis],
        chi1.field,
    )


def character_of_group(rd: RootDatum, nu: TorusCharacterDatum) -> SatakeParameter:
    """
    chi_nu(tau_lambda) = nu(lambda(pi)), a parameter with M = T.
    """
    return SatakeParameter.from_character(rd, frozenset(), nu)


def twist(chi: SatakeParameter, nu: TorusCharacterDatum) -> SatakeParameter:
    """
    Parameter of pi (x) nu given the parameter of pi.
    """
    return tensor(chi, character_of_group(chi.datum, nu))


def parameterize_from_oracle(
    oracle: Oracle,
    rd: RootDatum,
    spot_check: int = 2,
) -> SatakeParameter:
    """
    Recover (M, chi_M) from the values of a homomorphism on tau_lambda.

    M is read off the probes: alpha is in Pi_M exactly when the oracle
    vanishes on tau_(lambda_alpha). chi_M on a basis vector b is obtained
    by shifting b into the dominant cone with the sum d of the remaining
    probes: chi_M(b) = oracle(b + N d) / oracle(d)^N.
    """
    zero = (0,) * rd.rank
    one = oracle(zero)
    field = one.field
    if not one.is_one():
        raise InconsistentOracle(f"oracle takes the value {one} on tau_0")

    probes = {a: probe_cocharacter(rd, a) for a in rd.indices}
    levi = frozenset(a for a in rd.indices if oracle(probes[a]).is_zero())
    outside = [a for a in rd.indices if a not in levi]
    d = lattice.combine([probes[a] for a in outside], [1] * len(outside), rd.rank)
    od = oracle(d)
    if od.is_zero():
        raise InconsistentOracle(f"oracle vanishes on the central probe {list(d)}")

    values = []
    for b in orthogonal_sublattice(rd, levi):
        shift = 0
        for a in outside:
            pairing = lattice.dot(b, rd.simple_roots[a])
            step = lattice.dot(d, rd.simple_roots[a])
            shift = max(shift, -(pairing // step))
        top = tuple(x + shift * y for x, y in zip(b, d))
        value = oracle(top) / od**shift
        if value.is_zero():
            raise InconsistentOracle(f"oracle vanishes on {list(top)} inside X_(M,*,0)")
        values.append(value)
    chi = SatakeParameter(rd, levi, values, field)

    for lam in dominant_box(rd, spot_check):
        if oracle(lam) != chi.evaluate(lam):
            raise InconsistentOracle(
                f"oracle gives {oracle(lam)} on {list(lam)}, recovered {chi} gives "
                f"{chi.evaluate(lam)}"
            )
    logger.debug("Recovered %s", chi)
    return chi


def restrict_to_sublattice(chi: SatakeParameter,
                           basis: Sequence[Sequence[int]]) -> SatakeParameter:
    """
    The parameter of chi on k[X_*,+ meet Y] over the datum with
    cocharacter lattice Y.
    """
    sub = sub_datum(chi.datum, basis)

    def oracle(y: Cocharacter) -> FieldElement:
        return chi.evaluate(lattice.combine(basis, y, chi.datum.rank))

    return parameterize_from_oracle(oracle, sub)
