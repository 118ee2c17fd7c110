"""
Root datum of G/[M2, M2] compared with that of M1/L2.

For an orthogonal partition of the simple roots both quotients should
have characters (pi2 coroots)^perp, roots those of M1 and cocharacters
X_* / (Q pi2-coroots meet X_*). The two sides are built by different
lattice routes and then matched.
"""
import logging
from dataclasses import dataclass

from sympy import Matrix

from hecke import lattice
from hecke.exceptions import BadPartition
from hecke.lattice import Vector
from hecke.rootdatum.datum import ParabolicSubset, RootDatum
from hecke.rootdatum.geometry import coroot_columns, levi_datum

logger = logging.getLogger("hecke.rootdatum.quotient")


@dataclass(frozen=True)
class QuotientDatum:
    # Characters as vectors of X*; everything else in coordinates.
    characters: tuple[Vector, ...]
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    # pairing[i][j] = <character i, cocharacter basis vector j>
    pairing: tuple[Vector, ...]


def partition_problems(rd: RootDatum, pi1: ParabolicSubset,
                       pi2: ParabolicSubset) -> list[str]:
    problems = []
    if pi1 & pi2:
        problems.append(f"pi1 and pi2 share {sorted(pi1 & pi2)}")
    if pi1 | pi2 != rd.all_simple:
        problems.append(f"pi1 and pi2 miss {sorted(rd.all_simple - (pi1 | pi2))}")
    cartan = rd.cartan_matrix
    for i in sorted(pi1):
        for j in sorted(pi2):
            if cartan[i][j] != 0:
                problems.append(f"<alpha_{i}, coroot_{j}> = {cartan[i][j]} != 0")
    return problems


def _character_coordinates(characters, vector) -> Vector:
    coords = lattice.coordinates(characters, vector)
    if coords is None:
        raise ValueError(f"{vector} is not a character of the quotient")
    return coords


def quotient_of_group(rd: RootDatum, pi2: ParabolicSubset) -> QuotientDatum:
    """
    G/[M2, M2]: characters killing the pi2 coroots, cocharacters modulo
    the saturation of their span, roots of G that survive.
    """
    coroots2 = coroot_columns(rd, pi2)
    kernel = lattice.kernel(coroots2.T.copy())
    characters = tuple(lattice.to_tuple(kernel[:, j]) for j in range(kernel.shape[1]))
    s, sinv, _, complement = lattice.split_saturation(coroots2)

    def reduce(lam) -> Vector:
        coords = sinv.dot(lattice.as_vector(lam))
        return tuple(int(coords[i]) for i in complement)

    quotient_basis = [lattice.to_tuple(s[:, i]) for i in complement]
    surviving = [
        root for root in rd.positive_roots
        if all(rd.pairing(root.vector, rd.simple_coroots[j]) == 0 for j in pi2)
    ]
    return QuotientDatum(
        characters=characters,
        roots=tuple(_character_coordinates(characters, r.vector) for r in surviving),
        coroots=tuple(reduce(r.coroot) for r in surviving),
        pairing=tuple(
            tuple(lattice.dot(c, q) for q in quotient_basis) for c in characters
        ),
    )


def quotient_of_levi(rd: RootDatum, pi1: ParabolicSubset,
                     pi2: ParabolicSubset) -> QuotientDatum:
    """
    M1/L2 with L2 the torus generated by the pi2 coroots. Its
    cocharacters are read through the pairing with the characters, so
    the pairing on this side is the dot product.
    """
    annihilator = lattice.orthogonal_complement(
        [rd.simple_coroots[j] for j in sorted(pi2)], rd.rank
    )
    torus_l2 = lattice.orthogonal_complement(annihilator, rd.rank)
    characters = lattice.orthogonal_complement(torus_l2, rd.rank)

    levi = levi_datum(rd, pi1)
    roots, coroots = [], []
    for root in levi.positive_roots:
        roots.append(_character_coordinates(characters, root.vector))
        coroots.append(tuple(lattice.dot(c, root.coroot) for c in characters))
    k = len(characters)
    return QuotientDatum(
        characters=characters,
        roots=tuple(roots),
        coroots=tuple(coroots),
        pairing=tuple(tuple(int(i == j) for j in range(k)) for i in range(k)),
    )


def _is_unimodular(m: Matrix) -> bool:
    return all(x.is_integer for x in m) and abs(m.det()) == 1


def match_quotients(group_side: QuotientDatum, levi_side: QuotientDatum) -> bool:
    k = len(group_side.characters)
    if k != len(levi_side.characters):
        return False
    if k == 0:
        return not group_side.roots and not levi_side.roots

    # Both character lattices sit in the same X*; compare the bases.
    change = Matrix([
        list(_character_coordinates(levi_side.characters, c))
        for c in group_side.characters
    ]).T
    pairing = Matrix([list(row) for row in group_side.pairing])
    if not _is_unimodular(change) or abs(pairing.det()) != 1:
        return False
    # Cocharacter map forced by compatibility with the pairing.
    cochange = change.T.inv() * pairing
    if not _is_unimodular(cochange):
        return False

    def image(m: Matrix, v: Vector) -> Vector:
        return tuple(int(x) for x in m * Matrix(list(v)))

    mapped = {
        (image(change, a), image(cochange, b))
        for a, b in zip(group_side.roots, group_side.coroots)
    }
    expected = set(zip(levi_side.roots, levi_side.coroots))
    return mapped == expected


def quotient_datum_isomorphic(rd: RootDatum, pi1, pi2) -> bool:
    pi1, pi2 = rd.subset(pi1), rd.subset(pi2)
    problems = partition_problems(rd, pi1, pi2)
    if problems:
        raise BadPartition("; ".join(problems))
    group_side = quotient_of_group(rd, pi2)
    levi_side = quotient_of_levi(rd, pi1, pi2)
    same = match_quotients(group_side, levi_side)
    logger.debug(
        "%s: quotient data for pi1=%s pi2=%s %s",
        rd.name,
        sorted(pi1),
        sorted(pi2),
        "match" if same else "differ",
    )
    return same
