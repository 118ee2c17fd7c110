"""
Exhaustive checks of the two cone lemmas on a bounded box of coroot
coefficients.
"""
import itertools
import logging
from typing import Iterable, Optional, Sequence

from hecke import lattice
from hecke.exceptions import BadPartition, HeckeException, NotDominant
from hecke.rootdatum.datum import RootDatum
from hecke.rootdatum.geometry import (
    dominance_leq,
    orthogonal_partitions,
    orthogonal_sublattice,
    probe_cocharacter,
)
from hecke.rootdatum.quotient import partition_problems
from hecke.serialize import LemmaReport

logger = logging.getLogger("hecke.rootdatum.verifiers")

DOMINANCE_SQUARE = "dominance-square"
ORTHOGONAL_CONE = "orthogonal-cone"
KINDS = (DOMINANCE_SQUARE, ORTHOGONAL_CONE)


def _below(rd: RootDatum, top: Sequence[int], bound: int):
    """
    Yield (n, mu) for every dominant mu = top - sum n_i coroot_i with
    0 <= n_i <= bound.
    """
    for n in itertools.product(range(bound + 1), repeat=rd.semisimple_rank):
        mu = list(top)
        for coeff, coroot in zip(n, rd.simple_coroots):
            if coeff:
                for i, c in enumerate(coroot):
                    mu[i] -= coeff * c
        mu = tuple(mu)
        if rd.is_dominant(mu):
            yield n, mu


def check_dominance_square(rd: RootDatum, alpha: int, bound: int,
                           lam: Optional[Sequence[int]] = None):
    """
    For lambda orthogonal to every simple root but alpha: each dominant
    mu <= 2 lambda is 2 lambda itself or lies below 2 lambda - coroot_alpha.
    """
    lam = probe_cocharacter(rd, alpha) if lam is None else rd.cocharacter(lam)
    if not rd.is_dominant(lam):
        raise NotDominant(f"{list(lam)} is not dominant for {rd.name}")
    others = [j for j in rd.indices if j != alpha and lattice.dot(lam, rd.simple_roots[j])]
    if others:
        raise BadPartition(
            f"{list(lam)} is not orthogonal to the simple roots {others} other than {alpha}"
        )
    top = tuple(2 * x for x in lam)
    lowered = tuple(x - c for x, c in zip(top, rd.simple_coroots[alpha]))

    cases, failures = 0, []
    for n, mu in _below(rd, top, bound):
        cases += 1
        if mu != top and not dominance_leq(rd, mu, lowered):
            failures.append({
                "alpha": alpha,
                "lambda": list(lam),
                "mu": list(mu),
                "n": list(n),
            })
    return cases, failures


def _cone_tops(rd: RootDatum, pi1: Iterable[int]):
    """
    Dominant cocharacters orthogonal to pi2: small combinations of the
    pi1 probes shifted by central cocharacters.
    """
    probes = [probe_cocharacter(rd, a) for a in sorted(pi1)]
    center = orthogonal_sublattice(rd, rd.all_simple)
    seen = set()
    for cs in itertools.product(range(3), repeat=len(probes)):
        base = lattice.combine(probes, cs, rd.rank)
        for zs in itertools.product((-1, 0, 1), repeat=len(center)):
            lam = tuple(
                b + z for b, z in zip(base, lattice.combine(center, zs, rd.rank))
            )
            if lam not in seen:
                seen.add(lam)
                yield lam


def check_orthogonal_cone(rd: RootDatum, pi1, pi2, bound: int,
                          lam: Optional[Sequence[int]] = None):
    """
    For dominant lambda orthogonal to pi2, every dominant mu <= lambda
    has lambda - mu in the nonnegative span of the pi1 coroots.
    """
    pi1, pi2 = rd.subset(pi1), rd.subset(pi2)
    problems = partition_problems(rd, pi1, pi2)
    if problems:
        raise BadPartition("; ".join(problems))

    if lam is None:
        tops = list(_cone_tops(rd, pi1))
    else:
        lam = rd.cocharacter(lam)
        if not rd.is_dominant(lam):
            raise NotDominant(f"{list(lam)} is not dominant for {rd.name}")
        if any(lattice.dot(lam, rd.simple_roots[j]) for j in pi2):
            raise BadPartition(f"{list(lam)} is not orthogonal to pi2 {sorted(pi2)}")
        tops = [lam]

    cases, failures = 0, []
    for top in tops:
        for n, mu in _below(rd, top, bound):
            cases += 1
            leaks = [j for j in sorted(pi2) if n[j] != 0]
            off = [
                j for j in sorted(pi2) if lattice.dot(mu, rd.simple_roots[j]) != 0
            ]
            if leaks or off:
                failures.append({
                    "pi1": sorted(pi1),
                    "pi2": sorted(pi2),
                    "lambda": list(top),
                    "mu": list(mu),
                    "n": list(n),
                })
    return cases, failures


def verify_cone_lemmas(
    rd: RootDatum,
    kind: str,
    bound: int,
    alpha: Optional[int] = None,
    partition=None,
    lam: Optional[Sequence[int]] = None,
) -> LemmaReport:
    """
    Run one cone lemma exhaustively. Without ``alpha`` (resp.
    ``partition``) every simple root (resp. orthogonal partition) is
    checked.
    """
    if bound < 1:
        raise HeckeException(f"bound must be positive, got {bound}")

    cases, failures = 0, []
    reading = None
    if kind == DOMINANCE_SQUARE:
        alphas = rd.indices if alpha is None else [alpha]
        for a in alphas:
            rd.subset([a])
            n, f = check_dominance_square(rd, a, bound, lam)
            cases += n
            failures += f
    elif kind == ORTHOGONAL_CONE:
        # The lemma is checked with coroots: lambda - mu in Z>=0 pi1-coroots.
        reading = "coroot"
        partitions = orthogonal_partitions(rd) if partition is None else [partition]
        for pi1, pi2 in partitions:
            n, f = check_orthogonal_cone(rd, pi1, pi2, bound, lam)
            cases += n
            failures += f
    else:
        raise HeckeException(f"unknown lemma kind {kind!r}, expected one of {KINDS}")

    logger.info("%s on %s: %d cases checked", kind, rd.name, cases)
    for failure in failures:
        logger.warning("%s on %s fails: %s", kind, rd.name, failure)

    return LemmaReport(
        lemma=kind,
        datum=rd.name,
        cases=cases,
        counterexamples=failures,
        reading=reading,
        passed=not failures,
    )
