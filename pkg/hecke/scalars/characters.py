"""
Smooth characters of F^x and of split tori with values in F_{p^k}.

A smooth character of O^x is trivial on the pro-p group 1 + pi O, so it
factors through the residue field and is u -> u^e for an exponent e
modulo q - 1. Together with the value at the uniformizer this describes
the character completely.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from hecke import lattice
from hecke.exceptions import (
    DimensionMismatch,
    FieldMismatch,
    HeckeException,
    NotInLattice,
    SchemaError,
)
from hecke.lattice import Vector
from hecke.scalars.field import Field, FieldElement, get_field, prime_power
from hecke.serialize import CharacterModel, SmoothCharacterModel

logger = logging.getLogger("hecke.scalars.characters")


@dataclass(frozen=True)
class SmoothCharacter:
    unit_exponent: int
    uniformizer_value: FieldElement
    q: int

    def __post_init__(self):
        if self.uniformizer_value.is_zero():
            raise HeckeException("a character cannot take the value 0 at the uniformizer")
        self.uniformizer_value.field.require_residue_field(self.q)
        object.__setattr__(self, "unit_exponent", self.unit_exponent % (self.q - 1))

    @property
    def field(self) -> Field:
        return self.uniformizer_value.field

    @classmethod
    def trivial(cls, field: Field, q: int) -> "SmoothCharacter":
        return cls(0, field.one, q)

    def _check(self, other: "SmoothCharacter"):
        if self.q != other.q or self.field != other.field:
            raise FieldMismatch(
                f"characters over F_{self.q} in {self.field} and "
                f"F_{other.q} in {other.field} cannot be combined"
            )

    def __mul__(self, other: "SmoothCharacter") -> "SmoothCharacter":
        self._check(other)
        return SmoothCharacter(
            self.unit_exponent + other.unit_exponent,
            self.uniformizer_value * other.uniformizer_value,
            self.q,
        )

    def __pow__(self, n: int) -> "SmoothCharacter":
        return SmoothCharacter(self.unit_exponent * n, self.uniformizer_value**n, self.q)

    def inverse(self) -> "SmoothCharacter":
        return self**-1

    def is_trivial(self) -> bool:
        return self.unit_exponent == 0 and self.uniformizer_value.is_one()

    def to_model(self) -> SmoothCharacterModel:
        return SmoothCharacterModel(
            unit_exponent=self.unit_exponent,
            pi_value=self.uniformizer_value.to_json(),
        )


def is_trivial(chi: SmoothCharacter) -> bool:
    return chi.is_trivial()


@dataclass(frozen=True)
class TorusCharacterDatum:
    """
    A character of the torus with cocharacters ``basis``: one smooth
    character of F^x per basis vector.
    """
    basis: tuple[Vector, ...]
    chars: tuple[SmoothCharacter, ...]
    q: int
    field: Field
    rank: int

    def __post_init__(self):
        if len(self.basis) != len(self.chars):
            raise DimensionMismatch(
                f"{len(self.basis)} basis vectors but {len(self.chars)} characters"
            )
        for v in self.basis:
            if len(v) != self.rank:
                raise DimensionMismatch(f"basis vector {v} is not of length {self.rank}")
        for chi in self.chars:
            if chi.q != self.q or chi.field != self.field:
                raise FieldMismatch(
                    f"basis character over F_{chi.q} in {chi.field} does not match "
                    f"F_{self.q} in {self.field}"
                )

    @classmethod
    def trivial(cls, field: Field, q: int, basis: Sequence[Sequence[int]],
                rank: int) -> "TorusCharacterDatum":
        basis = tuple(tuple(v) for v in basis)
        return cls(basis, tuple(SmoothCharacter.trivial(field, q) for _ in basis), q,
                   field, rank)

    @classmethod
    def standard(cls, chars: Sequence[SmoothCharacter]) -> "TorusCharacterDatum":
        """
        Character of the full torus given on the standard basis of X_*.
        """
        n = len(chars)
        basis = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(basis, tuple(chars), chars[0].q, chars[0].field, n)

    def compose_with_cocharacter(self, lam: Sequence[int]) -> SmoothCharacter:
        """
        The character x -> nu(lam(x)) of F^x.
        """
        coords = lattice.coordinates(self.basis, lam)
        if coords is None:
            raise NotInLattice(f"{list(lam)} is not in the lattice spanned by {list(self.basis)}")
        result = SmoothCharacter.trivial(self.field, self.q)
        for n, chi in zip(coords, self.chars):
            if n:
                result = result * chi**n
        return result

    def uniformizer_value(self, lam: Sequence[int]) -> FieldElement:
        return self.compose_with_cocharacter(lam).uniformizer_value

    def rebase(self, basis: Sequence[Sequence[int]]) -> "TorusCharacterDatum":
        """
        Restrict to the sublattice spanned by ``basis``.
        """
        basis = tuple(tuple(v) for v in basis)
        return TorusCharacterDatum(
            basis,
            tuple(self.compose_with_cocharacter(v) for v in basis),
            self.q,
            self.field,
            self.rank,
        )

    def __mul__(self, other: "TorusCharacterDatum") -> "TorusCharacterDatum":
        other = other.rebase(self.basis)
        return TorusCharacterDatum(
            self.basis,
            tuple(a * b for a, b in zip(self.chars, other.chars)),
            self.q,
            self.field,
            self.rank,
        )

    def is_trivial(self) -> bool:
        return all(chi.is_trivial() for chi in self.chars)

    def to_model(self) -> CharacterModel:
        return CharacterModel(
            q=self.q,
            field_degree=self.field.k,
            basis_chars=[chi.to_model() for chi in self.chars],
            basis=[list(v) for v in self.basis],
        )


def compose_with_cocharacter(nu: TorusCharacterDatum, lam: Sequence[int]) -> SmoothCharacter:
    return nu.compose_with_cocharacter(lam)


def field_for(q: int, field_degree: int = 1) -> Field:
    """
    F_{p^k} for q = p^f where k = field_degree; the residue field must fit.
    """
    p, _ = prime_power(q)
    field = get_field(p, field_degree)
    field.require_residue_field(q)
    return field


def smooth_from_model(model: SmoothCharacterModel, field: Field, q: int) -> SmoothCharacter:
    value = field(model.pi_value)
    if value.is_zero():
        raise SchemaError("pi_value must be nonzero")
    return SmoothCharacter(model.unit_exponent, value, q)


def character_from_model(model: CharacterModel, rank: int,
                         basis: Optional[Sequence[Sequence[int]]] = None) -> TorusCharacterDatum:
    field = field_for(model.q, model.field_degree)
    if model.basis is not None:
        basis = model.basis
    elif basis is None:
        basis = [[int(i == j) for j in range(rank)] for i in range(rank)]
    return TorusCharacterDatum(
        tuple(tuple(v) for v in basis),
        tuple(smooth_from_model(c, field, model.q) for c in model.basis_chars),
        model.q,
        field,
        rank,
    )


def trivial_character(q: int, rank: int, field_degree: int = 1) -> TorusCharacterDatum:
    field = field_for(q, field_degree)
    basis = [[int(i == j) for j in range(rank)] for i in range(rank)]
    return TorusCharacterDatum.trivial(field, q, basis, rank)
