"""
Finite Weyl groups generated from the simple reflections of a datum.

Elements are identified by their matrix on X_*. Each element keeps the
lexicographically smallest reduced word, found by a breadth-first walk
that multiplies by simple reflections on the right.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from common.env import weyl_cap
from hecke import lattice
from hecke.exceptions import GroupTooLarge, HeckeException
from hecke.rootdatum.datum import RootDatum, weyl_group_order

logger = logging.getLogger("hecke.weyl")

Matrix = tuple[tuple[int, ...], ...]


def _key(m: np.ndarray) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def _cocharacter_reflection(rd: RootDatum, i: int) -> np.ndarray:
    # lambda -> lambda - <alpha_i, lambda> coroot_i
    alpha = lattice.as_vector(rd.simple_roots[i])
    coroot = lattice.as_vector(rd.simple_coroots[i])
    return np.eye(rd.rank, dtype=object) - np.outer(coroot, alpha)


def _weight_reflection(rd: RootDatum, i: int) -> np.ndarray:
    # nu -> nu - <nu, coroot_i> alpha_i
    alpha = lattice.as_vector(rd.simple_roots[i])
    coroot = lattice.as_vector(rd.simple_coroots[i])
    return np.eye(rd.rank, dtype=object) - np.outer(alpha, coroot)


def _root_reflection(rd: RootDatum, i: int) -> np.ndarray:
    # Acts on coefficient vectors in the simple roots.
    r = rd.semisimple_rank
    cartan = rd.cartan_matrix
    m = np.eye(r, dtype=object)
    for k in range(r):
        m[i, k] -= cartan[k][i]
    return m


@dataclass(frozen=True)
class WeylElement:
    index: int
    word: tuple[int, ...]
    matrix: Matrix = field(repr=False)
    weight_matrix: Matrix = field(repr=False)
    root_matrix: Matrix = field(repr=False)
    inversions: frozenset[int] = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, lam: Sequence[int]) -> tuple[int, ...]:
        return tuple(lattice.dot(row, lam) for row in self.matrix)

    def act_on_weight(self, nu: Sequence[int]) -> tuple[int, ...]:
        return tuple(lattice.dot(row, nu) for row in self.weight_matrix)

    def act_on_root(self, coefficients: Sequence[int]) -> tuple[int, ...]:
        return tuple(lattice.dot(row, coefficients) for row in self.root_matrix)

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i + 1}" for i in self.word)


class WeylGroup:
    """
    Complete multiplication data of W for a datum of modest size.
    """

    def __init__(self, rd: RootDatum, cap: Optional[int] = None):
        self.datum = rd
        self.cap = weyl_cap() if cap is None else cap
        expected = weyl_group_order(rd)
        if expected > self.cap:
            raise GroupTooLarge(
                f"|W| = {expected} for {rd.name} exceeds the cap {self.cap}"
            )

        self._generators = [
            (
                _cocharacter_reflection(rd, i),
                _weight_reflection(rd, i),
                _root_reflection(rd, i),
            )
            for i in rd.indices
        ]
        self.elements: list[WeylElement] = []
        self._by_matrix: dict[Matrix, int] = {}
        # right[w][i] is the index of w * s_i
        self.right: list[list[int]] = []
        self._lower: dict[int, frozenset[int]] = {}
        self._generate()

        if len(self.elements) != expected:
            raise HeckeException(
                f"generated {len(self.elements)} elements for {rd.name}, "
                f"expected {expected}"
            )
        logger.debug("Generated W(%s) with %d elements", rd.name, len(self.elements))

    def _make(self, word, matrix, weight_matrix, root_matrix) -> WeylElement:
        inversions = frozenset(
            k for k, root in enumerate(self.datum.positive_roots)
            if all(x <= 0 for x in root_matrix.dot(lattice.as_vector(root.coefficients)))
        )
        element = WeylElement(
            index=len(self.elements),
            word=tuple(word),
            matrix=_key(matrix),
            weight_matrix=_key(weight_matrix),
            root_matrix=_key(root_matrix),
            inversions=inversions,
        )
        self.elements.append(element)
        self._by_matrix[element.matrix] = element.index
        return element

    def _generate(self):
        rd = self.datum
        r = rd.semisimple_rank
        self._make(
            (),
            np.eye(rd.rank, dtype=object),
            np.eye(rd.rank, dtype=object),
            np.eye(r, dtype=object),
        )
        level = [0]
        while level:
            following = []
            for idx in level:
                w = self.elements[idx]
                for i in rd.indices:
                    co, wt, rt = self._generators[i]
                    matrix = np.array(w.matrix, dtype=object).dot(co)
                    if _key(matrix) in self._by_matrix:
                        continue
                    if len(self.elements) >= self.cap:
                        raise GroupTooLarge(
                            f"W({rd.name}) has more than {self.cap} elements"
                        )
                    weight_matrix = np.array(w.weight_matrix, dtype=object).dot(wt)
                    root_matrix = np.array(
                        w.root_matrix, dtype=object
                    ).reshape(r, r).dot(rt)
                    following.append(
                        self._make(w.word + (i,), matrix, weight_matrix, root_matrix).index
                    )
            level = following

        for w in self.elements:
            row = []
            for i in rd.indices:
                matrix = np.array(w.matrix, dtype=object).dot(self._generators[i][0])
                row.append(self._by_matrix[_key(matrix)])
            self.right.append(row)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def reflection(self, i: int) -> WeylElement:
        return self.elements[self.right[0][i]]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        idx = 0
        for i in word:
            self.datum.subset([i])
            idx = self.right[idx][i]
        return self.elements[idx]

    def multiply(self, w: WeylElement, v: WeylElement) -> WeylElement:
        idx = w.index
        for i in v.word:
            idx = self.right[idx][i]
        return self.elements[idx]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(reversed(w.word))

    def lower_ideal(self, v: WeylElement) -> frozenset[int]:
        """
        Indices of all products of subwords of the reduced word of v.
        """
        if v.index not in self._lower:
            ideal = {0}
            for i in v.word:
                ideal |= {self.right[u][i] for u in ideal}
            self._lower[v.index] = frozenset(ideal)
        return self._lower[v.index]

    def bruhat_leq(self, w: WeylElement, v: WeylElement) -> bool:
        if w.length > v.length:
            return False
        return w.index in self.lower_ideal(v)

    def parabolic_subgroup(self, theta: Iterable[int]) -> list[WeylElement]:
        theta = self.datum.subset(theta)
        return [w for w in self.elements if set(w.word) <= theta]

    def sends_to_positive(self, w: WeylElement, theta: Iterable[int]) -> bool:
        r = self.datum.semisimple_rank
        for i in theta:
            unit = [1 if k == i else 0 for k in range(r)]
            if any(x < 0 for x in w.act_on_root(unit)):
                return False
        return True


def generate_group(rd: RootDatum, cap: Optional[int] = None) -> WeylGroup:
    return WeylGroup(rd, cap)
