"""
Irreducibility of tau_coroot - 1 in k[X_*].

The element is reducible exactly when the coroot is twice a lattice
vector, in which case t^2 - 1 = (t - 1)(t + 1) splits it. A bounded
search over Laurent polynomials gives an independent check.
"""
import itertools
import logging
from typing import Optional

from common.env import search_cap
from hecke.exceptions import SearchSpaceTooLarge
from hecke.rootdatum.datum import RootDatum
from hecke.satake.algebra import LaurentPolynomial
from hecke.scalars.field import get_field, prime_power

logger = logging.getLogger("hecke.satake.irreducibility")


def tau_coroot_minus_one_irreducible(rd: RootDatum, alpha: int) -> bool:
    rd.subset([alpha])
    return any(x % 2 for x in rd.simple_coroots[alpha])


def coroot_binomial(rd: RootDatum, alpha: int, q: int) -> LaurentPolynomial:
    rd.subset([alpha])
    return LaurentPolynomial.binomial(get_field(*prime_power(q)), rd.simple_coroots[alpha])


def divide(f: LaurentPolynomial, g: LaurentPolynomial,
           box: list[tuple[int, int]]) -> Optional[LaurentPolynomial]:
    """
    Exact quotient f / g when g has lowest term 1 at the origin and the
    quotient has all its exponents inside ``box``; otherwise None.
    """
    quotient = LaurentPolynomial(f.field, f.nvars)
    remainder = f
    while not remainder.is_zero():
        key, c = remainder.lowest()
        if any(not lo <= x <= hi for x, (lo, hi) in zip(key, box)):
            return None
        term = LaurentPolynomial(f.field, f.nvars, {key: c})
        quotient = quotient + term
        remainder = remainder - term * g
    return quotient


def brute_force_laurent_factor_search(
    element: LaurentPolynomial,
    support_bound: int,
    q: int,
) -> Optional[tuple[LaurentPolynomial, LaurentPolynomial]]:
    """
    Look for element = g * h up to a unit with neither factor a unit.

    Both factors are normalized to have lowest term 1 at the origin, so
    their exponents lie in the bounding box of the normalized element.
    The candidates for g are cut down further to [-B, B]^n.
    """
    field = get_field(*prime_power(q))
    f = LaurentPolynomial(field, element.nvars, element.terms).normalized()
    box = f.bounding_box()
    origin = (0,) * f.nvars

    ranges = [
        range(max(lo, -support_bound), min(hi, support_bound) + 1) for lo, hi in box
    ]
    points = [p for p in itertools.product(*ranges) if p > origin]
    count = field.q**len(points) - 1
    if count > search_cap():
        raise SearchSpaceTooLarge(
            f"{count} candidate factors exceed the search cap {search_cap()}"
        )
    logger.debug("Searching %d candidate factors of %s", count, f)

    values = list(field.elements())
    for coeffs in itertools.product(values, repeat=len(points)):
        if all(c.is_zero() for c in coeffs):
            continue
        terms = {origin: field.one}
        terms.update({p: c for p, c in zip(points, coeffs) if not c.is_zero()})
        g = LaurentPolynomial(field, f.nvars, terms)
        h = divide(f, g, box)
        if h is not None and not h.is_unit():
            return g, h
    return None
