"""
Parabolic subgroups, minimal coset representatives and stabilisers.
"""
import logging
from typing import Iterable, Sequence

from hecke import lattice
from hecke.exceptions import EXIT_FAILED, HeckeException, NotDominantOrAntiDominant
from hecke.rootdatum.datum import ParabolicSubset
from hecke.serialize import LemmaReport
from hecke.weyl.group import WeylElement, WeylGroup

logger = logging.getLogger("hecke.weyl.cosets")

COSET_BRUHAT = "coset-bruhat"


def min_coset_reps(group: WeylGroup, theta: Iterable[int]) -> list[WeylElement]:
    """
    W(M) = {w : w(theta) consists of positive roots}.
    """
    theta = group.datum.subset(theta)
    return [w for w in group if group.sends_to_positive(w, theta)]


def coset_factorize(group: WeylGroup, w: WeylElement,
                    theta: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """
    The unique w = w0 * w1 with w0 in W(M), w1 in W_M.
    """
    theta = group.datum.subset(theta)
    for w1 in group.parabolic_subgroup(theta):
        w0 = group.multiply(w, group.inverse(w1))
        if group.sends_to_positive(w0, theta):
            if w0.length + w1.length != w.length:
                raise HeckeException(
                    f"lengths of {w0} and {w1} do not add up to that of {w}",
                    exit_code=EXIT_FAILED,
                )
            return w0, w1
    raise HeckeException(f"no factorization of {w} found", exit_code=EXIT_FAILED)


def stabilizer(group: WeylGroup, nu: Sequence[int]) -> list[WeylElement]:
    nu = tuple(nu)
    return [w for w in group if w.act_on_weight(nu) == nu]


def stabilizer_subset(group: WeylGroup, nu: Sequence[int]) -> ParabolicSubset:
    """
    Simple roots whose coroots pair to zero with nu. For dominant or
    anti-dominant nu their reflections generate the stabiliser, which is
    checked against the stabiliser computed directly.
    """
    rd = group.datum
    nu = rd.weight(nu)
    if not (rd.is_weight_dominant(nu) or rd.is_weight_antidominant(nu)):
        raise NotDominantOrAntiDominant(
            f"{list(nu)} is neither dominant nor anti-dominant for {rd.name}"
        )
    subset = frozenset(
        i for i in rd.indices if lattice.dot(nu, rd.simple_coroots[i]) == 0
    )
    generated = {w.index for w in group.parabolic_subgroup(subset)}
    direct = {w.index for w in stabilizer(group, nu)}
    if generated != direct:
        raise HeckeException(
            f"stabiliser of {list(nu)} is not generated by {sorted(subset)}",
            exit_code=EXIT_FAILED,
        )
    return subset


def verify_coset_bruhat_lemma(group: WeylGroup, theta: Iterable[int]) -> LemmaReport:
    """
    For w, v0 in W(M) and v1 in W_M: v0 v1 >= w exactly when v0 >= w.
    """
    theta = group.datum.subset(theta)
    reps = min_coset_reps(group, theta)
    levi = group.parabolic_subgroup(theta)

    cases, failures = 0, []
    for w in reps:
        for v0 in reps:
            below_v0 = group.bruhat_leq(w, v0)
            for v1 in levi:
                cases += 1
                if group.bruhat_leq(w, group.multiply(v0, v1)) != below_v0:
                    failures.append({
                        "theta": sorted(theta),
                        "w": list(w.word),
                        "v0": list(v0.word),
                        "v1": list(v1.word),
                    })

    name = group.datum.name
    logger.info("%s on %s theta=%s: %d cases", COSET_BRUHAT, name, sorted(theta), cases)
    for failure in failures:
        logger.warning("%s on %s fails: %s", COSET_BRUHAT, name, failure)
    return LemmaReport(
        lemma=COSET_BRUHAT,
        datum=name,
        cases=cases,
        counterexamples=failures,
        passed=not failures,
    )
