"""
Changing the weight: moving a lowest weight nu to nu - (q - 1) omega_alpha
when the Satake parameter allows it.
"""
import logging
from dataclasses import dataclass
from typing import Sequence

from hecke import lattice
from hecke.exceptions import NotSimplyConnected, WindowViolated
from hecke.rootdatum.datum import RootDatum, Weight
from hecke.rootdatum.geometry import (
    fundamental_weight,
    in_orthogonal_sublattice,
    is_derived_simply_connected,
    lowest_weight_window,
)
from hecke.satake.parameter import SatakeParameter

logger = logging.getLogger("hecke.classification.weights")


def changing_weight_applicable(rd: RootDatum, nu: Sequence[int], alpha: int,
                               chi: SatakeParameter) -> bool:
    rd.subset([alpha])
    coroot = rd.simple_coroots[alpha]
    if lattice.dot(nu, coroot) != 0 or alpha in chi.levi:
        return False
    if not in_orthogonal_sublattice(rd, chi.levi, coroot):
        return True
    return not chi.character_value(coroot).is_one()


@dataclass
class WeightStep:
    alpha: int
    weight: Weight


def minimize_weight(rd: RootDatum, nu: Sequence[int], chi: SatakeParameter,
                    q: int) -> tuple[Weight, list[WeightStep]]:
    """
    Apply the change of weight at the smallest admissible simple root until
    none is left. Every step removes alpha from Pi_nu and leaves the other
    pairings alone, so there are at most |Pi| steps.
    """
    nu = rd.weight(nu)
    if not lowest_weight_window(rd, nu, q):
        raise WindowViolated(f"{list(nu)} is not a lowest weight for q = {q}")

    steps: list[WeightStep] = []
    while True:
        candidates = [
            a for a in rd.indices if changing_weight_applicable(rd, nu, a, chi)
        ]
        if not candidates:
            break
        alpha = candidates[0]
        if not is_derived_simply_connected(rd):
            raise NotSimplyConnected(
                f"omega_{alpha} is unavailable: the derived group of {rd.name} "
                "is not simply connected"
            )
        omega = fundamental_weight(rd, alpha)
        nu = tuple(x - (q - 1) * w for x, w in zip(nu, omega))
        if not lowest_weight_window(rd, nu, q):
            raise WindowViolated(f"step at {alpha} leaves the window: {list(nu)}")
        steps.append(WeightStep(alpha=alpha, weight=nu))
        logger.debug("Changed weight at %d to %s", alpha, list(nu))
    return nu, steps
