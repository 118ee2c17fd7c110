"""
2x2 matrices over Q_p with exact rational entries, coset
representatives of G/K for G = GL2(Q_p), K = GL2(Z_p), and the Cartan
decomposition.

Right cosets gK are represented by [[p^a, b], [0, p^d]] with
0 <= b < p^a and b in Z[1/p].
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from hecke.exceptions import HeckeException, NotDominant

Number = Union[int, Fraction]


def valuation(x: Number, p: int) -> float:
    """
    p-adic valuation; math.inf for 0.
    """
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def residue(x: Number, p: int) -> int:
    """
    Image of a p-integral rational in F_p.
    """
    x = Fraction(x)
    if x.denominator % p == 0:
        raise HeckeException(f"{x} is not p-integral for p = {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass(frozen=True)
class PAdicMatrix:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    p: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.det() == 0:
            raise HeckeException(f"{self} is singular")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Number]], p: int) -> "PAdicMatrix":
        (a, b), (c, d) = rows
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d), p)

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return (self.a, self.b), (self.c, self.d)

    def entries(self) -> tuple[Fraction, ...]:
        return self.a, self.b, self.c, self.d

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "PAdicMatrix") -> "PAdicMatrix":
        if other.p != self.p:
            raise HeckeException(f"cannot multiply matrices for p = {self.p} and {other.p}")
        return PAdicMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.p,
        )

    def inverse(self) -> "PAdicMatrix":
        det = self.det()
        return PAdicMatrix(self.d / det, -self.b / det, -self.c / det, self.a / det, self.p)

    def min_valuation(self) -> float:
        return min(valuation(x, self.p) for x in self.entries())

    def is_integral(self) -> bool:
        return self.min_valuation() >= 0

    def in_k(self) -> bool:
        return self.is_integral() and valuation(self.det(), self.p) == 0

    def reduce(self) -> tuple[int, int, int, int]:
        """
        Image in GL2(F_p) of an element of K.
        """
        if not self.in_k():
            raise HeckeException(f"{self} is not in GL2(Z_p)")
        return tuple(residue(x, self.p) for x in self.entries())

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def identity(p: int) -> PAdicMatrix:
    return PAdicMatrix.of([[1, 0], [0, 1]], p)


def diag(p: int, e1: int, e2: int) -> PAdicMatrix:
    """
    lambda(p) for lambda = (e1, e2).
    """
    return PAdicMatrix.of([[Fraction(p)**e1, 0], [0, Fraction(p)**e2]], p)


def lower_unipotent(p: int, z: Number) -> PAdicMatrix:
    return PAdicMatrix.of([[1, 0], [z, 1]], p)


def upper_unipotent(p: int, z: Number) -> PAdicMatrix:
    return PAdicMatrix.of([[1, z], [0, 1]], p)


def weyl_element(p: int) -> PAdicMatrix:
    """
    Determinant one representative of the nontrivial Weyl element.
    """
    return PAdicMatrix.of([[0, -1], [1, 0]], p)


SWAP = ((0, 1), (1, 0))


def _swap(p: int) -> PAdicMatrix:
    return PAdicMatrix.of(SWAP, p)


def _reduce_mod(y: Fraction, a: int, p: int) -> Fraction:
    """
    The representative of y + p^a Z_p in Z[1/p] meet [0, p^a).
    """
    e = valuation(y, p)
    if e >= a:
        return Fraction(0)
    unit = y / Fraction(p)**e
    r = residue_mod(unit, p**(a - e))
    return Fraction(p)**e * r


def residue_mod(x: Fraction, modulus: int) -> int:
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def coset_decompose(g: PAdicMatrix) -> tuple[PAdicMatrix, PAdicMatrix]:
    """
    (rep, k) with g = rep @ k, rep the canonical representative of gK.
    """
    p = g.p
    h = g
    if valuation(h.c, p) < valuation(h.d, p):
        h = h @ _swap(p)
    # Clear the lower left entry with a column operation.
    h = h @ PAdicMatrix.of([[1, 0], [-h.c / h.d, 1]], p)
    a, d = valuation(h.a, p), valuation(h.d, p)
    pa, pd = Fraction(p)**a, Fraction(p)**d
    h = h @ PAdicMatrix.of([[pa / h.a, 0], [0, pd / h.d]], p)
    b = _reduce_mod(h.b, a, p)
    rep = PAdicMatrix(pa, b, Fraction(0), pd, p)
    k = rep.inverse() @ g
    if not k.in_k():
        raise HeckeException(f"coset reduction of {g} produced {rep}, not in gK")
    return rep, k


def coset_canonicalize(g: PAdicMatrix) -> PAdicMatrix:
    return coset_decompose(g)[0]


def cartan_decompose(g: PAdicMatrix) -> tuple[int, int]:
    """
    The dominant (a, b) with g in K diag(p^a, p^b) K.
    """
    b = int(g.min_valuation())
    a = int(valuation(g.det(), g.p)) - b
    return a, b


def cartan_decomposition(g: PAdicMatrix) -> tuple[PAdicMatrix, tuple[int, int], PAdicMatrix]:
    """
    (k2, (a, b), k1) with g = k2 @ diag(p^a, p^b) @ k1.
    """
    p = g.p
    positions = [(0, 0), (0, 1), (1, 0), (1, 1)]
    rows = g.rows()
    i, j = min(positions, key=lambda ij: valuation(rows[ij[0]][ij[1]], p))
    row_perm = _swap(p) if i else identity(p)
    col_perm = _swap(p) if j else identity(p)
    h = row_perm @ g @ col_perm
    lower = lower_unipotent(p, h.c / h.a)
    upper = upper_unipotent(p, h.b / h.a)
    # h = lower @ diag(h.a, det / h.a) @ upper
    a, b = cartan_decompose(g)
    u1 = h.a / Fraction(p)**b
    u2 = (h.det() / h.a) / Fraction(p)**a
    w = _swap(p)
    k2 = row_perm @ lower @ w
    k1 = PAdicMatrix.of([[u2, 0], [0, u1]], p) @ w @ upper @ col_perm
    return k2, (a, b), k1


def double_coset_points(lam: Sequence[int], p: int) -> list[PAdicMatrix]:
    """
    Canonical representatives of K diag(p^a, p^b) K / K.
    """
    a0, b0 = lam
    if a0 < b0:
        raise NotDominant(f"{list(lam)} is not dominant")
    points = []
    for a in range(b0, a0 + 1):
        d = a0 + b0 - a
        for j in range(p**(a - b0)):
            b = Fraction(p)**b0 * j
            if min(a, d, valuation(b, p)) != b0:
                continue
            points.append(PAdicMatrix(Fraction(p)**a, b, Fraction(0), Fraction(p)**d, p))
    return points


def dominant_below(lam: Sequence[int]) -> Iterator[tuple[int, int]]:
    """
    Dominant (a, b) with (a, b) <= lam in the dominance order.
    """
    a0, b0 = lam
    k = 0
    while a0 - k >= b0 + k:
        yield a0 - k, b0 + k
        k += 1
