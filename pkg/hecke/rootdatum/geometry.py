"""
Lattice geometry of a root datum: dominance, probes, fundamental
weights, central sublattices and derived data.
"""
import math
from typing import Iterable, Optional, Sequence

from hecke import lattice
from hecke.exceptions import CorootNotContained, NoIntegralLift
from hecke.lattice import Vector
from hecke.rootdatum.datum import (
    Cocharacter,
    ParabolicSubset,
    RootDatum,
    Weight,
    mask,
)


def coroot_columns(rd: RootDatum, indices: Optional[Iterable[int]] = None):
    if indices is None:
        indices = rd.indices
    vectors = [rd.simple_coroots[i] for i in sorted(indices)]
    return lattice.basis_columns(vectors, rd.rank)


def is_derived_simply_connected(rd: RootDatum) -> bool:
    """
    The derived group is simply connected iff the coroots span a
    saturated sublattice of X_*.
    """
    return lattice.index_in_saturation(coroot_columns(rd)) == 1


def dominance_coefficients(
    rd: RootDatum,
    mu: Sequence[int],
    lam: Sequence[int],
) -> Optional[Vector]:
    """
    The unique n with lam - mu = sum n_i coroot_i, or None.
    """
    diff = [a - b for a, b in zip(lam, mu)]
    return lattice.solve_integral(coroot_columns(rd), diff)


def dominance_leq(rd: RootDatum, mu: Sequence[int], lam: Sequence[int]) -> bool:
    coeffs = dominance_coefficients(rd, mu, lam)
    return coeffs is not None and all(c >= 0 for c in coeffs)


def fundamental_weight(rd: RootDatum, alpha: int) -> Weight:
    """
    omega with <omega, coroot_beta> = delta(alpha, beta), the
    lexicographically smallest nonnegative one when several exist.
    """
    rd.subset([alpha])
    rows = lattice.as_matrix(rd.simple_coroots, rd.rank)
    target = [1 if i == alpha else 0 for i in rd.indices]
    x0 = lattice.solve_integral(rows, target)
    if x0 is None:
        raise NoIntegralLift(
            f"no integral fundamental weight for simple root {alpha} of {rd.name}"
        )
    return lattice.canonical_point(x0, lattice.kernel(rows))


def probe_cocharacter(rd: RootDatum, alpha: int) -> Cocharacter:
    """
    Dominant lambda orthogonal to every simple root but alpha, with the
    smallest positive value of <lambda, alpha> the lattice allows.
    """
    rd.subset([alpha])
    others = [rd.simple_roots[j] for j in rd.indices if j != alpha]
    orth = lattice.orthogonal_complement(others, rd.rank)

    values = [lattice.dot(rd.simple_roots[alpha], b) for b in orth]
    step = math.gcd(*values)
    row = lattice.as_matrix([values])
    coeffs = lattice.solve_integral(row, [step])
    x0 = lattice.combine(orth, coeffs, rd.rank)
    directions = lattice.basis_columns(orth, rd.rank).dot(lattice.kernel(row))
    return lattice.canonical_point(x0, directions)


def probe_cocharacters(rd: RootDatum) -> dict[int, Cocharacter]:
    return {alpha: probe_cocharacter(rd, alpha) for alpha in rd.indices}


def orthogonal_sublattice(rd: RootDatum,
                          theta: Iterable[int]) -> tuple[Cocharacter, ...]:
    """
    Hermite basis of {lambda in X_* : <lambda, beta> = 0 for beta in theta}.
    """
    theta = rd.subset(theta)
    rows = [rd.simple_roots[i] for i in sorted(theta)]
    return lattice.orthogonal_complement(rows, rd.rank)


def in_orthogonal_sublattice(rd: RootDatum, theta: Iterable[int],
                             lam: Sequence[int]) -> bool:
    return all(lattice.dot(lam, rd.simple_roots[i]) == 0 for i in theta)


def orthogonal_partitions(
        rd: RootDatum) -> list[tuple[ParabolicSubset, ParabolicSubset]]:
    """
    Every partition (pi1, pi2) of the simple roots with <pi1, pi2 coroots> = 0.
    """
    cartan = rd.cartan_matrix
    out = []
    for bits in range(1 << rd.semisimple_rank):
        pi1 = frozenset(i for i in rd.indices if bits >> i & 1)
        pi2 = rd.all_simple - pi1
        if all(cartan[i][j] == 0 for i in pi1 for j in pi2):
            out.append((pi1, pi2))
    return sorted(out, key=lambda pair: mask(pair[0]))


def levi_datum(rd: RootDatum, theta: Iterable[int]) -> RootDatum:
    theta = sorted(rd.subset(theta))
    return RootDatum(
        rank=rd.rank,
        simple_roots=tuple(rd.simple_roots[i] for i in theta),
        simple_coroots=tuple(rd.simple_coroots[i] for i in theta),
        name=f"{rd.name}[M{theta}]",
    )


def sub_datum(rd: RootDatum, basis: Sequence[Sequence[int]]) -> RootDatum:
    """
    The datum with the same roots and coroots and cocharacter lattice
    spanned by ``basis``, written in coordinates of that basis.
    """
    coroots = []
    for i, coroot in enumerate(rd.simple_coroots):
        coords = lattice.coordinates(basis, coroot)
        if coords is None:
            raise CorootNotContained(
                f"coroot {i} = {coroot} is not in the sublattice {list(basis)}"
            )
        coroots.append(coords)
    roots = tuple(
        tuple(lattice.dot(alpha, y) for y in basis) for alpha in rd.simple_roots
    )
    return RootDatum(
        rank=len(basis),
        simple_roots=roots,
        simple_coroots=tuple(coroots),
        name=f"{rd.name}|Y",
    )


def lowest_weight_window(rd: RootDatum, nu: Sequence[int], q: int) -> bool:
    """
    -q < <nu, coroot> <= 0 for every simple coroot.
    """
    return all(-q < lattice.dot(nu, c) <= 0 for c in rd.simple_coroots)


def lowest_weights_equivalent(rd: RootDatum, nu: Sequence[int],
                              other: Sequence[int], q: int) -> bool:
    """
    True when other = nu + (q - 1) nu0 for some nu0 orthogonal to every
    simple coroot; such lowest weights give isomorphic representations
    of G(k).
    """
    diff = [b - a for a, b in zip(nu, other)]
    if any(d % (q - 1) for d in diff):
        return False
    nu0 = [d // (q - 1) for d in diff]
    return all(lattice.dot(nu0, c) == 0 for c in rd.simple_coroots)
