"""
Split root data given by explicit integer lattices.

X* and X_* are both Z^rank and the pairing between them is the dot
product, so GL_n, SL_n and PGL_n differ only by their vectors.
"""
import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from sympy import Matrix

from hecke import lattice
from hecke.exceptions import (
    DimensionMismatch,
    InfiniteType,
    InvalidDatum,
    InvalidSubset,
    NonCartan,
)
from hecke.lattice import Vector

# Weights live in X*, cocharacters in X_*; both are integer tuples.
Weight = Vector
Cocharacter = Vector
ParabolicSubset = frozenset[int]

EXCEPTIONAL_WEYL_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}


class Root(NamedTuple):
    coefficients: Vector  # in the simple roots
    vector: Weight
    coroot_coefficients: Vector  # in the simple coroots
    coroot: Cocharacter

    @property
    def height(self) -> int:
        return sum(self.coefficients)


@dataclass(frozen=True)
class RootDatum:
    rank: int
    simple_roots: tuple[Weight, ...]
    simple_coroots: tuple[Cocharacter, ...]
    name: str = "custom"

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @property
    def indices(self) -> range:
        return range(len(self.simple_roots))

    @property
    def all_simple(self) -> ParabolicSubset:
        return frozenset(self.indices)

    @functools.cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """
        Entry (i, j) is <alpha_i, coroot_j>.
        """
        return tuple(
            tuple(lattice.dot(a, c) for c in self.simple_coroots)
            for a in self.simple_roots
        )

    @functools.cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return _positive_roots(self)

    def pairing(self, chi: Sequence[int], lam: Sequence[int]) -> int:
        return lattice.dot(chi, lam)

    def weight(self, values: Iterable[int]) -> Weight:
        return self._vector(values, "weight")

    def cocharacter(self, values: Iterable[int]) -> Cocharacter:
        return self._vector(values, "cocharacter")

    def _vector(self, values: Iterable[int], kind: str) -> Vector:
        vector = tuple(int(x) for x in values)
        if len(vector) != self.rank:
            raise DimensionMismatch(
                f"{kind} {vector} has length {len(vector)}, "
                f"datum {self.name} has rank {self.rank}"
            )
        return vector

    def subset(self, indices: Iterable[int]) -> ParabolicSubset:
        subset = frozenset(int(i) for i in indices)
        bad = sorted(i for i in subset if i not in self.indices)
        if bad:
            raise InvalidSubset(
                f"simple root indices {bad} out of range for {self.name}"
            )
        return subset

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(lattice.dot(lam, a) >= 0 for a in self.simple_roots)

    def is_weight_dominant(self, nu: Sequence[int]) -> bool:
        return all(lattice.dot(nu, c) >= 0 for c in self.simple_coroots)

    def is_weight_antidominant(self, nu: Sequence[int]) -> bool:
        return all(lattice.dot(nu, c) <= 0 for c in self.simple_coroots)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "simple_roots": [list(v) for v in self.simple_roots],
            "simple_coroots": [list(v) for v in self.simple_coroots],
        }


def mask(subset: Iterable[int]) -> int:
    return sum(1 << i for i in subset)


def subsets(subset: Iterable[int]) -> list[ParabolicSubset]:
    """
    All subsets of ``subset`` ordered by bitmask.
    """
    items = sorted(subset)
    out = [
        frozenset(c)
        for k in range(len(items) + 1)
        for c in itertools.combinations(items, k)
    ]
    return sorted(out, key=mask)


def _positive_roots(rd: RootDatum) -> tuple[Root, ...]:
    cartan = rd.cartan_matrix
    r = rd.semisimple_rank
    unit = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]

    found = {u: u for u in unit}
    queue = list(unit)
    while queue:
        coeffs = queue.pop(0)
        co_coeffs = found[coeffs]
        for j in range(r):
            pair = sum(coeffs[i] * cartan[i][j] for i in range(r))
            if pair == 0:
                continue
            image = tuple(c - pair * (i == j) for i, c in enumerate(coeffs))
            if any(c < 0 for c in image) or image in found:
                continue
            co_pair = sum(co_coeffs[i] * cartan[j][i] for i in range(r))
            found[image] = tuple(
                c - co_pair * (i == j) for i, c in enumerate(co_coeffs)
            )
            queue.append(image)

    roots = []
    for coeffs, co_coeffs in found.items():
        roots.append(
            Root(
                coefficients=coeffs,
                vector=lattice.combine(rd.simple_roots, coeffs, rd.rank),
                coroot_coefficients=co_coeffs,
                coroot=lattice.combine(rd.simple_coroots, co_coeffs, rd.rank),
            )
        )
    roots.sort(key=lambda root: (root.height, root.coefficients))
    return tuple(roots)


def _cartan_violations(cartan: Sequence[Sequence[int]]) -> list[str]:
    violations = []
    r = len(cartan)
    for i in range(r):
        if cartan[i][i] != 2:
            violations.append(f"<alpha_{i}, coroot_{i}> = {cartan[i][i]} != 2")
    for i, j in itertools.permutations(range(r), 2):
        if cartan[i][j] > 0:
            violations.append(
                f"off-diagonal entry <alpha_{i}, coroot_{j}> = {cartan[i][j]} > 0"
            )
        if (cartan[i][j] == 0) != (cartan[j][i] == 0) and i < j:
            violations.append(f"entries ({i},{j}) and ({j},{i}) are not both zero")
    return violations


def _finite_type_violations(cartan: Sequence[Sequence[int]]) -> list[str]:
    violations = []
    r = len(cartan)
    full = Matrix(cartan)
    for k in range(1, r + 1):
        for rows in itertools.combinations(range(r), k):
            minor = full.extract(list(rows), list(rows)).det()
            if minor <= 0:
                violations.append(
                    f"principal minor on {list(rows)} is {minor}, not positive"
                )
    if not violations and _classify(cartan) is None:
        violations.append("Cartan matrix is not of finite type")
    return violations


def datum_violations(
    rank: int,
    simple_roots: Sequence[Sequence[int]],
    simple_coroots: Sequence[Sequence[int]],
) -> dict[str, list[str]]:
    """
    Violated invariants grouped as "structure", "cartan" and "finite".
    Empty lists everywhere means the input is a valid root datum.
    """
    found = {"structure": [], "cartan": [], "finite": []}
    if rank < 1:
        found["structure"].append(f"rank {rank} is not positive")
    if len(simple_roots) != len(simple_coroots):
        found["structure"].append(
            f"{len(simple_roots)} simple roots but "
            f"{len(simple_coroots)} simple coroots"
        )
    for kind, vectors in (("root", simple_roots), ("coroot", simple_coroots)):
        for i, v in enumerate(vectors):
            if len(v) != rank:
                found["structure"].append(
                    f"simple {kind} {i} has length {len(v)}, expected {rank}"
                )
    if found["structure"]:
        return found

    for kind, vectors in (("roots", simple_roots), ("coroots", simple_coroots)):
        if vectors and Matrix([list(v) for v in vectors]).rank() != len(vectors):
            found["structure"].append(f"simple {kind} are linearly dependent")

    cartan = [[lattice.dot(a, c) for c in simple_coroots] for a in simple_roots]
    found["cartan"] = _cartan_violations(cartan)
    if not found["cartan"]:
        found["finite"] = _finite_type_violations(cartan)
    return found


def validate_datum(
    rank: int,
    simple_roots: Sequence[Sequence[int]],
    simple_coroots: Sequence[Sequence[int]],
    name: str = "custom",
) -> RootDatum:
    found = datum_violations(rank, simple_roots, simple_coroots)
    if found["cartan"]:
        raise NonCartan(found["cartan"] + found["structure"])
    if found["finite"]:
        raise InfiniteType(found["finite"] + found["structure"])
    if found["structure"]:
        raise InvalidDatum(found["structure"])
    return RootDatum(
        rank=rank,
        simple_roots=tuple(tuple(int(x) for x in v) for v in simple_roots),
        simple_coroots=tuple(tuple(int(x) for x in v) for v in simple_coroots),
        name=name,
    )


def _components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    r = len(cartan)
    seen = set()
    components = []
    for start in range(r):
        if start in seen:
            continue
        stack, component = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in range(r):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        components.append(sorted(component))
    return components


def _arm_length(adjacent: dict[int, set[int]], start: int, previous: int) -> int:
    length = 1
    while True:
        nxt = adjacent[start] - {previous}
        if not nxt:
            return length
        previous, start = start, next(iter(nxt))
        length += 1


def _component_type(cartan: Sequence[Sequence[int]],
                    nodes: list[int]) -> Optional[str]:
    n = len(nodes)
    if n == 1:
        return "A1"
    adjacent = {i: {j for j in nodes if j != i and cartan[i][j] != 0} for i in nodes}
    bonds = {
        (i, j): cartan[i][j] * cartan[j][i]
        for i, j in itertools.combinations(nodes, 2)
        if cartan[i][j] != 0
    }
    if len(bonds) != n - 1 or any(v > 3 for v in bonds.values()):
        return None
    degrees = {i: len(adjacent[i]) for i in nodes}
    multiple = [edge for edge, v in bonds.items() if v > 1]

    if not multiple:
        branches = [i for i in nodes if degrees[i] >= 3]
        if not branches:
            return f"A{n}"
        if len(branches) > 1 or degrees[branches[0]] > 3:
            return None
        center = branches[0]
        arms = sorted(_arm_length(adjacent, j, center) for j in adjacent[center])
        if arms[0] == 1 and arms[1] == 1:
            return f"D{n}"
        return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(arms))

    if len(multiple) > 1 or max(degrees.values()) > 2:
        return None
    i, j = multiple[0]
    if bonds[(i, j)] == 3:
        return "G2" if n == 2 else None
    if n == 2:
        return "B2"
    for end, other in ((i, j), (j, i)):
        if degrees[end] == 1:
            # The end node is short exactly when its neighbour pairs to -2 with it.
            return f"B{n}" if cartan[other][end] == -2 else f"C{n}"
    return "F4" if n == 4 else None


def _classify(cartan: Sequence[Sequence[int]]) -> Optional[list[str]]:
    labels = []
    for component in _components(cartan):
        label = _component_type(cartan, component)
        if label is None:
            return None
        labels.append(label)
    return labels


def cartan_type(rd: RootDatum) -> list[str]:
    labels = _classify(rd.cartan_matrix)
    if labels is None:
        raise InfiniteType(["Cartan matrix is not of finite type"])
    return labels


def _type_order(label: str) -> int:
    if label in EXCEPTIONAL_WEYL_ORDERS:
        return EXCEPTIONAL_WEYL_ORDERS[label]
    family, n = label[0], int(label[1:])
    if family == "A":
        return math.factorial(n + 1)
    if family in ("B", "C"):
        return 2**n * math.factorial(n)
    return 2**(n - 1) * math.factorial(n)


def weyl_group_order(rd: RootDatum) -> int:
    order = 1
    for label in cartan_type(rd):
        order *= _type_order(label)
    return order


def positive_coroots(rd: RootDatum) -> tuple[Cocharacter, ...]:
    return tuple(root.coroot for root in rd.positive_roots)
