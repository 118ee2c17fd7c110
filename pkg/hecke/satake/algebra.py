"""
Sparse polynomial algebras over F_{p^k}: the dominant monoid algebra
k[X_*,+] with basis tau_lambda, and Laurent polynomials on a lattice.
"""
from typing import Iterable, Mapping, Optional, Sequence, Union

from hecke.exceptions import FieldMismatch, NotDominant
from hecke.lattice import Vector
from hecke.rootdatum.datum import Cocharacter, RootDatum
from hecke.scalars.field import Field, FieldElement
from hecke.serialize import SatakeTermModel

Scalar = Union[int, FieldElement]


def _add_terms(field: Field, left: Mapping, right: Mapping, sign: int = 1) -> dict:
    out = dict(left)
    for key, c in right.items():
        value = out.get(key, field.zero) + (c if sign > 0 else -c)
        if value.is_zero():
            out.pop(key, None)
        else:
            out[key] = value
    return out


class SparseElement:
    """
    Finitely supported map from exponent vectors to nonzero scalars.
    """

    def __init__(self, field: Field, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        self.field = field
        self._terms: dict[Vector, FieldElement] = {}
        for key, c in (terms or {}).items():
            c = field(c)
            if not c.is_zero():
                key = tuple(int(x) for x in key)
                self._terms[key] = self._terms.get(key, field.zero) + c
                if self._terms[key].is_zero():
                    del self._terms[key]

    def _same(self, other: "SparseElement"):
        if type(self) is not type(other) or self.field != other.field:
            raise FieldMismatch(f"cannot combine elements over {self.field} and {other.field}")

    def _new(self, terms: Mapping) -> "SparseElement":
        raise NotImplementedError

    @property
    def terms(self) -> dict[Vector, FieldElement]:
        return dict(self._terms)

    def support(self) -> list[Vector]:
        return sorted(self._terms)

    def coefficient(self, key: Sequence[int]) -> FieldElement:
        return self._terms.get(tuple(key), self.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        self._same(other)
        return self._new(_add_terms(self.field, self._terms, other._terms))

    def __sub__(self, other):
        self._same(other)
        return self._new(_add_terms(self.field, self._terms, other._terms, sign=-1))

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.field(other)
            return self._new({k: v * c for k, v in self._terms.items()})
        self._same(other)
        out: dict[Vector, FieldElement] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, self.field.zero) + c1 * c2
        return self._new(out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        result = self.one_like()
        for _ in range(n):
            result = result * self
        return result

    def one_like(self):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.field, tuple(sorted(self._terms.items(), key=lambda t: t[0]))))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{self._symbol}{list(k)}" for k, c in sorted(self._terms.items()))

    _symbol = "x"


class MonoidAlgebraElement(SparseElement):
    """
    Element of k[X_*,+]: keys are dominant cocharacters of ``datum``.
    """

    _symbol = "tau"

    def __init__(self, datum: RootDatum, field: Field,
                 terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        super().__init__(field, terms)
        self.datum = datum
        for key in self._terms:
            datum.cocharacter(key)
            if not datum.is_dominant(key):
                raise NotDominant(f"tau_{list(key)} is not in the dominant monoid of {datum.name}")

    def _new(self, terms):
        return MonoidAlgebraElement(self.datum, self.field, terms)

    def _same(self, other):
        super()._same(other)
        if other.datum != self.datum:
            raise FieldMismatch(f"elements over {self.datum.name} and {other.datum.name}")

    @classmethod
    def tau(cls, datum: RootDatum, field: Field, lam: Sequence[int],
            coeff: Scalar = 1) -> "MonoidAlgebraElement":
        return cls(datum, field, {tuple(lam): coeff})

    @classmethod
    def one(cls, datum: RootDatum, field: Field) -> "MonoidAlgebraElement":
        return cls.tau(datum, field, (0,) * datum.rank)

    @classmethod
    def zero(cls, datum: RootDatum, field: Field) -> "MonoidAlgebraElement":
        return cls(datum, field)

    def one_like(self):
        return MonoidAlgebraElement.one(self.datum, self.field)

    def to_terms(self) -> list[SatakeTermModel]:
        # Highest cocharacter first.
        return [
            SatakeTermModel(weight=list(k), coeff=self._terms[k].to_json())
            for k in sorted(self._terms, reverse=True)
        ]


def multiply(a: MonoidAlgebraElement, b: MonoidAlgebraElement) -> MonoidAlgebraElement:
    return a * b


class LaurentPolynomial(SparseElement):
    """
    Element of k[Z^n] with arbitrary integer exponents.
    """

    _symbol = "t"

    def __init__(self, field: Field, nvars: int,
                 terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        super().__init__(field, terms)
        self.nvars = nvars

    def _new(self, terms):
        return LaurentPolynomial(self.field, self.nvars, terms)

    def one_like(self):
        return LaurentPolynomial(self.field, self.nvars, {(0,) * self.nvars: 1})

    @classmethod
    def binomial(cls, field: Field, exponent: Sequence[int]) -> "LaurentPolynomial":
        """
        t^exponent - 1
        """
        n = len(exponent)
        return cls(field, n, {tuple(exponent): 1, (0,) * n: -1})

    def lowest(self) -> tuple[Vector, FieldElement]:
        key = min(self._terms)
        return key, self._terms[key]

    def shift(self, exponent: Sequence[int]) -> "LaurentPolynomial":
        return self._new({
            tuple(a + b for a, b in zip(k, exponent)): c for k, c in self._terms.items()
        })

    def normalized(self) -> "LaurentPolynomial":
        """
        The associate whose lexicographically lowest term is 1.
        """
        key, c = self.lowest()
        return self.shift([-x for x in key]) * c.inverse()

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def bounding_box(self) -> list[tuple[int, int]]:
        keys = list(self._terms)
        return [(min(k[i] for k in keys), max(k[i] for k in keys)) for i in range(self.nvars)]

    def exponents(self) -> Iterable[Vector]:
        return self.support()
