"""
Finite fields F_{p^k} as F_p[x] modulo a fixed irreducible polynomial.

Elements are coefficient tuples, constant term first. The polynomial
arithmetic is sympy's galoistools, which wants lists with the leading
coefficient first.
"""
import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_irreducible_p,
    gf_mul,
    gf_neg,
    gf_pow_mod,
    gf_rem,
    gf_strip,
    gf_sub,
)

from hecke.exceptions import ExtensionRequired, FieldMismatch, UnsupportedPrime

logger = logging.getLogger("hecke.scalars.field")

# Conway polynomials, constant term first.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
}


def _high_first(coeffs: Sequence[int]) -> list:
    return gf_strip([ZZ(int(c)) for c in reversed(coeffs)])


def _low_first(poly: Sequence, k: int) -> tuple[int, ...]:
    coeffs = [int(c) for c in reversed(poly)]
    coeffs += [0] * (k - len(coeffs))
    return tuple(coeffs[:k])


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=k):
        low_first = tuple(reversed(tail)) + (1,)
        if gf_irreducible_p(_high_first(low_first), p, ZZ):
            return low_first
    raise UnsupportedPrime(f"no irreducible polynomial of degree {k} over F_{p}")


@functools.lru_cache(maxsize=None)
def prime_power(q: int) -> tuple[int, int]:
    """
    (p, f) with q = p^f.
    """
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise UnsupportedPrime(f"{q} is not a prime power")
    (p, f), = factors.items()
    return int(p), int(f)


class Field:
    def __init__(self, p: int, k: int = 1):
        if not isprime(p):
            raise UnsupportedPrime(f"{p} is not prime")
        if k < 1:
            raise UnsupportedPrime(f"field degree {k} is not positive")
        self.p = p
        self.k = k
        self.q = p**k
        modulus = CONWAY.get((p, k))
        if modulus is None or not gf_irreducible_p(_high_first(modulus), p, ZZ):
            modulus = _smallest_irreducible(p, k)
            logger.debug("Using %s as modulus for F_%d", modulus, self.q)
        self.modulus = modulus
        self._modulus = _high_first(modulus)

    def __repr__(self) -> str:
        return f"Field({self.p}, {self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __call__(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            self.check(value)
            return value
        if isinstance(value, int):
            value = [value]
        return FieldElement(self, self._reduce(_high_first([c % self.p for c in value])))

    def _reduce(self, poly) -> tuple[int, ...]:
        return _low_first(gf_rem(poly, self._modulus, self.p, ZZ), self.k)

    def check(self, element: "FieldElement"):
        if element.field != self:
            raise FieldMismatch(f"{element} lies in {element.field}, expected {self}")

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    def elements(self) -> Iterator["FieldElement"]:
        """
        All elements ordered by their integer encoding sum c_i p^i.
        """
        for n in range(self.q):
            coeffs = []
            for _ in range(self.k):
                n, c = divmod(n, self.p)
                coeffs.append(c)
            yield FieldElement(self, tuple(coeffs))

    def units(self) -> list["FieldElement"]:
        return [x for x in self.elements() if not x.is_zero()]

    @functools.cached_property
    def generator(self) -> "FieldElement":
        order = self.q - 1
        primes = list(factorint(order)) if order > 1 else []
        for x in self.units():
            if all(x**(order // ell) != self.one for ell in primes):
                return x
        raise UnsupportedPrime(f"no generator found for F_{self.q}")

    def contains_residue_field(self, q: int) -> bool:
        p, f = prime_power(q)
        return p == self.p and self.k % f == 0

    def require_residue_field(self, q: int):
        p, f = prime_power(q)
        if p != self.p:
            raise FieldMismatch(f"residue field F_{q} has characteristic {p}, not {self.p}")
        if self.k % f:
            raise ExtensionRequired(math.lcm(self.k, f))


@functools.lru_cache(maxsize=None)
def get_field(p: int, k: int = 1) -> Field:
    return Field(p, k)


@dataclass(frozen=True)
class FieldElement:
    field: Field
    coeffs: tuple[int, ...]

    def _poly(self):
        return _high_first(self.coeffs)

    def _other(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.field(other)
        self.field.check(other)
        return other

    def __add__(self, other):
        other = self._other(other)
        return FieldElement(
            self.field, self.field._reduce(gf_add(self._poly(), other._poly(), self.field.p, ZZ))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        return FieldElement(
            self.field, self.field._reduce(gf_sub(self._poly(), other._poly(), self.field.p, ZZ))
        )

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return FieldElement(self.field, self.field._reduce(gf_neg(self._poly(), self.field.p, ZZ)))

    def __mul__(self, other):
        other = self._other(other)
        return FieldElement(
            self.field, self.field._reduce(gf_mul(self._poly(), other._poly(), self.field.p, ZZ))
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse()**(-n)
        if n == 0:
            return self.field.one
        power = gf_pow_mod(self._poly(), n, self.field._modulus, self.field.p, ZZ)
        return FieldElement(self.field, _low_first(power, self.field.k))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        return self**(self.field.q - 2)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.k, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self == self.field.one

    def to_int(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> Union[int, list[int]]:
        if self.field.k == 1:
            return self.coeffs[0]
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.field.k == 1:
            return str(self.coeffs[0])
        terms = [
            f"{c}" if i == 0 else (f"{c}x" if i == 1 else f"{c}x^{i}")
            for i, c in enumerate(self.coeffs) if c
        ]
        return " + ".join(terms) or "0"
