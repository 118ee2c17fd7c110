"""
Satake transform of GL2 Hecke kernels and the identities checked with it.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from common.env import hecke_primes
from hecke.exceptions import HeckeException, IdentityFailed, UnsupportedPrime
from hecke.gl2.kernels import HeckeKernel, build_kernel, convolve
from hecke.gl2.padic import diag, dominant_below, lower_unipotent
from hecke.gl2.reps import FiniteRep
from hecke.rootdatum import load_datum
from hecke.satake import MonoidAlgebraElement
from hecke.scalars import FieldElement, get_field
from hecke.serialize import ChangingWeightReport

logger = logging.getLogger("hecke.gl2.transform")

GL2 = "builtin:GL2"
LAMBDA = (1, 0)


def _coefficient(phi: HeckeKernel, mu: tuple[int, int], depth: int) -> int:
    """
    Sum of phi(mu(p) u) over u = [[1, 0], [c, 1]], c in p^-depth Z_p / Z_p,
    restricted to the lowest weight lines.
    """
    p = phi.p
    t = diag(p, *mu)
    total = 0
    for j in range(p**depth):
        value = phi.evaluate(t @ lower_unipotent(p, Fraction(j, p**depth)))
        total += int(value[phi.target.r, phi.source.r])
    return total % p


def satake_transform(phi: HeckeKernel) -> MonoidAlgebraElement:
    datum = load_datum(GL2)
    field = get_field(phi.p)
    candidates = sorted({mu for lam in phi.support for mu in dominant_below(lam)}, reverse=True)
    terms = {}
    for mu in candidates:
        # Only c with valuation at least b_lambda - mu_2 can land in the support.
        depth = max(0, max(mu[1] - lam[1] for lam in phi.support))
        value = _coefficient(phi, mu, depth)
        if _coefficient(phi, mu, depth + 1) != value:
            raise HeckeException(f"Satake sum at {list(mu)} did not stabilise at depth {depth}")
        terms[mu] = value
    return MonoidAlgebraElement(datum, field, terms)


@dataclass(frozen=True)
class ChangingWeightResult:
    p: int
    m: int
    c: FieldElement
    transform: MonoidAlgebraElement
    kernel: HeckeKernel
    passed: bool = True

    def to_model(self) -> ChangingWeightReport:
        return ChangingWeightReport(
            p=self.p,
            m=self.m,
            c=self.c.to_int(),
            terms=self.transform.to_terms(),
            passed=self.passed,
        )


def changing_weight_pair(p: int, m: int) -> tuple[HeckeKernel, HeckeKernel]:
    """
    (phi21, phi12) between Sym^0 (x) det^m and the companion lowest
    weight (m - (p - 1), m), i.e. Sym^(p-1) (x) det^m, on K diag(p, 1) K.
    """
    v1 = FiniteRep(0, m, p)
    v2 = FiniteRep(p - 1, m, p)
    return build_kernel(v1, v2, LAMBDA), build_kernel(v2, v1, LAMBDA)


def verify_changing_weight_identity(p: int, m: int) -> ChangingWeightResult:
    """
    S(phi12 * phi21) = c (tau_(2,0) - tau_(1,1)) with c nonzero.
    """
    if p not in hecke_primes():
        raise UnsupportedPrime(f"p = {p} is not one of the configured primes {hecke_primes()}")
    phi21, phi12 = changing_weight_pair(p, m)
    theta = convolve(phi12, phi21)
    transform = satake_transform(theta)

    datum, field = transform.datum, transform.field
    c = transform.coefficient((2, 0))
    expected = MonoidAlgebraElement(datum, field, {(2, 0): c, (1, 1): -c})
    if c.is_zero() or transform != expected:
        logger.warning("changing weight identity fails for p=%d m=%d: %r", p, m, transform)
        raise IdentityFailed({
            "p": p,
            "m": m,
            "terms": [t.dict(by_alias=True) for t in transform.to_terms()],
        })
    logger.info("changing weight identity holds for p=%d m=%d with c=%s", p, m, c)
    return ChangingWeightResult(p=p, m=m % (p - 1), c=c, transform=transform, kernel=theta)


@dataclass(frozen=True)
class HeckeRelationResult:
    p: int
    relation: bool
    multiplicative: bool

    @property
    def passed(self) -> bool:
        return self.relation and self.multiplicative


def hecke_relation_check(p: int) -> HeckeRelationResult:
    """
    T_(1,0) * T_(1,0) = T_(2,0) + (p + 1) T_(1,1) on the trivial weight,
    and S respects that product.
    """
    trivial = FiniteRep(0, 0, p)
    t10 = build_kernel(trivial, trivial, (1, 0))
    t20 = build_kernel(trivial, trivial, (2, 0))
    t11 = build_kernel(trivial, trivial, (1, 1))
    product = convolve(t10, t10)
    relation = product == t20 + t11 * (p + 1)
    multiplicative = satake_transform(product) == satake_transform(t10) * satake_transform(t10)
    return HeckeRelationResult(p=p, relation=relation, multiplicative=multiplicative)
