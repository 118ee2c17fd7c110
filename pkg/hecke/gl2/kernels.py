"""
Spherical Hecke kernels for GL2(Q_p) with coefficients in irreducible
representations of GL2(F_p), and their action on compact inductions.

A kernel is stored by its values at diag(p^a, p^b) for the dominant
(a, b) in its support. Every other value comes from bi-K-equivariance
phi(k2 x k1) = k2 phi(x) k1.
"""
import logging
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np

from hecke.exceptions import HeckeException, IncompatibleWeights, NotDominant
from hecke.gl2.padic import (
    PAdicMatrix,
    cartan_decompose,
    cartan_decomposition,
    coset_decompose,
    diag,
    dominant_below,
    double_coset_points,
    identity,
    lower_unipotent,
    weyl_element,
)
from hecke.gl2.reps import FiniteRep, matmul_mod, mod_p

logger = logging.getLogger("hecke.gl2.kernels")

Support = tuple[int, int]


class HeckeKernel:
    def __init__(self, source: FiniteRep, target: FiniteRep,
                 values: Optional[Mapping[Sequence[int], np.ndarray]] = None):
        if source.p != target.p:
            raise IncompatibleWeights(f"{source} over F_{source.p} and {target} over F_{target.p}")
        self.source = source
        self.target = target
        self.p = source.p
        self._values: dict[Support, np.ndarray] = {}
        for lam, value in (values or {}).items():
            lam = (int(lam[0]), int(lam[1]))
            if lam[0] < lam[1]:
                raise NotDominant(f"support {list(lam)} is not dominant")
            value = mod_p(np.asarray(value, dtype=np.int64), self.p)
            if value.shape != (target.dim, source.dim):
                raise HeckeException(
                    f"value at {list(lam)} has shape {value.shape}, "
                    f"expected {(target.dim, source.dim)}"
                )
            if value.any():
                value.setflags(write=False)
                self._values[lam] = value

    @classmethod
    def zero(cls, source: FiniteRep, target: FiniteRep) -> "HeckeKernel":
        return cls(source, target)

    @classmethod
    def unit(cls, rep: FiniteRep) -> "HeckeKernel":
        return cls(rep, rep, {(0, 0): np.eye(rep.dim, dtype=np.int64)})

    @property
    def support(self) -> list[Support]:
        return sorted(self._values, reverse=True)

    def is_zero(self) -> bool:
        return not self._values

    def value(self, lam: Sequence[int]) -> np.ndarray:
        lam = (int(lam[0]), int(lam[1]))
        if lam in self._values:
            return self._values[lam]
        return np.zeros((self.target.dim, self.source.dim), dtype=np.int64)

    def evaluate(self, x: PAdicMatrix) -> np.ndarray:
        lam = cartan_decompose(x)
        if lam not in self._values:
            return np.zeros((self.target.dim, self.source.dim), dtype=np.int64)
        k2, _, k1 = cartan_decomposition(x)
        out = matmul_mod(self.target.rho(k2), self._values[lam], self.p)
        return matmul_mod(out, self.source.rho(k1), self.p)

    def _same(self, other: "HeckeKernel"):
        if other.source != self.source or other.target != self.target:
            raise IncompatibleWeights(
                f"kernels {self.source} -> {self.target} and {other.source} -> {other.target}"
            )

    def __add__(self, other: "HeckeKernel") -> "HeckeKernel":
        self._same(other)
        values = dict(self._values)
        for lam, value in other._values.items():
            values[lam] = values[lam] + value if lam in values else value
        return HeckeKernel(self.source, self.target, values)

    def __mul__(self, scalar: int) -> "HeckeKernel":
        return HeckeKernel(
            self.source,
            self.target,
            {lam: value * int(scalar) for lam, value in self._values.items()},
        )

    __rmul__ = __mul__

    def __sub__(self, other: "HeckeKernel") -> "HeckeKernel":
        return self + other * -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeKernel):
            return NotImplemented
        return (
            self.source == other.source and self.target == other.target
            and self.support == other.support
            and all(np.array_equal(v, other._values[k]) for k, v in self._values.items())
        )

    def __repr__(self) -> str:
        return f"HeckeKernel({self.source} -> {self.target}, support={self.support})"

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "values": [
                {"lambda": list(lam), "matrix": self._values[lam].tolist()}
                for lam in self.support
            ],
        }


def build_kernel(source: FiniteRep, target: FiniteRep, lam: Sequence[int]) -> HeckeKernel:
    """
    The kernel supported on K diag(p^a, p^b) K whose value there is
    source -> coinvariants = invariants -> target, sending the lowest
    weight vector to the lowest weight vector.
    """
    a, b = int(lam[0]), int(lam[1])
    if a < b:
        raise NotDominant(f"{list(lam)} is not dominant")
    if source.p != target.p:
        raise IncompatibleWeights(f"{source} and {target} live over different primes")
    p = source.p
    if a == b:
        if source != target:
            raise IncompatibleWeights(
                f"central support {[a, b]} needs isomorphic reps, got {source} and {target}"
            )
        return HeckeKernel(source, target, {(a, b): np.eye(source.dim, dtype=np.int64)})

    mismatch = [
        (u, v) for u, v in zip(source.lowest_weight, target.lowest_weight)
        if (u - v) % (p - 1)
    ]
    if mismatch:
        raise IncompatibleWeights(
            f"lowest weights {source.lowest_weight} and {target.lowest_weight} "
            f"differ as characters of the torus of GL2(F_{p})"
        )
    value = np.zeros((target.dim, source.dim), dtype=np.int64)
    value[target.r, source.r] = 1
    return HeckeKernel(source, target, {(a, b): value})


def twist_kernel(phi: HeckeKernel, n: int = 1) -> HeckeKernel:
    """
    The image of phi under H(V1, V2) = H(V1 (x) det^n, V2 (x) det^n),
    with the determinant extended to Q_p^x by sending p to 1.
    """
    return HeckeKernel(
        phi.source.twist(n),
        phi.target.twist(n),
        {lam: phi.value(lam) for lam in phi.support},
    )


class InductionElement:
    """
    Finite sum of [g, v] in the compact induction of a FiniteRep, kept
    on canonical coset representatives using [g k, v] = [g, k v].
    """

    def __init__(self, rep: FiniteRep):
        self.rep = rep
        self._terms: dict[PAdicMatrix, np.ndarray] = {}

    @classmethod
    def basic(cls, rep: FiniteRep, g: PAdicMatrix, v: Sequence[int]) -> "InductionElement":
        out = cls(rep)
        out.add(g, v)
        return out

    def add(self, g: PAdicMatrix, v: Sequence[int]) -> "InductionElement":
        rep_g, k = coset_decompose(g)
        w = matmul_mod(self.rep.rho(k), np.asarray(v, dtype=np.int64), self.rep.p)
        if rep_g in self._terms:
            w = mod_p(self._terms[rep_g] + w, self.rep.p)
        if w.any():
            self._terms[rep_g] = w
        else:
            self._terms.pop(rep_g, None)
        return self

    def items(self) -> Iterator[tuple[PAdicMatrix, np.ndarray]]:
        for g in sorted(self._terms, key=_coset_key):
            yield g, self._terms[g]

    def coefficient(self, g: PAdicMatrix) -> np.ndarray:
        """
        The vector v with this element containing [g, v], g canonical.
        """
        return self._terms.get(g, np.zeros(self.rep.dim, dtype=np.int64))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "InductionElement") -> "InductionElement":
        if other.rep != self.rep:
            raise IncompatibleWeights(f"induced from {self.rep} and {other.rep}")
        out = InductionElement(self.rep)
        for element in (self, other):
            for g, v in element.items():
                out.add(g, v)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, InductionElement):
            return NotImplemented
        return (
            self.rep == other.rep and self._terms.keys() == other._terms.keys()
            and all(np.array_equal(v, other._terms[g]) for g, v in self._terms.items())
        )

    def __repr__(self) -> str:
        body = " + ".join(f"[{g}, {v.tolist()}]" for g, v in self.items())
        return f"InductionElement({self.rep}: {body or '0'})"


def _coset_key(g: PAdicMatrix):
    return g.a, g.d, g.b


def _inverse_points(lam: Support, p: int) -> list[PAdicMatrix]:
    # K diag(p^-a, p^-b) K / K
    return double_coset_points((-lam[1], -lam[0]), p)


def apply_kernel(phi: HeckeKernel, f: InductionElement) -> InductionElement:
    """
    phi * [g, v] = sum over y in G/K of [g y, phi(y^-1) v].
    """
    if f.rep != phi.source:
        raise IncompatibleWeights(f"kernel from {phi.source} applied to an element induced from {f.rep}")
    p = phi.p
    steps = []
    for lam in phi.support:
        for y in _inverse_points(lam, p):
            steps.append((y, phi.evaluate(y.inverse())))
    out = InductionElement(phi.target)
    for g, v in f.items():
        for y, value in steps:
            w = matmul_mod(value, v, p)
            if w.any():
                out.add(g @ y, w)
    return out


def convolve(phi: HeckeKernel, psi: HeckeKernel) -> HeckeKernel:
    """
    The kernel of f -> phi * (psi * f), read off from the images of
    [1, e_j]: the coefficient at diag(p^a, p^b)^-1 is theta(diag(p^a, p^b)) e_j.
    """
    if psi.target != phi.source:
        raise IncompatibleWeights(f"cannot compose {psi.target} -> with a kernel from {phi.source}")
    source, target, p = psi.source, phi.target, phi.p
    allowed = {
        mu
        for l1 in phi.support
        for l2 in psi.support
        for mu in dominant_below((l1[0] + l2[0], l1[1] + l2[1]))
    }

    images = []
    found = set()
    for j in range(source.dim):
        e = np.zeros(source.dim, dtype=np.int64)
        e[j] = 1
        image = apply_kernel(phi, apply_kernel(psi, InductionElement.basic(source, identity(p), e)))
        images.append(image)
        for g, _ in image.items():
            found.add(cartan_decompose(g.inverse()))

    stray = sorted(found - allowed)
    if stray:
        raise HeckeException(f"convolution produced support {stray} outside {sorted(allowed)}")

    values = {}
    for mu in sorted(found):
        rep, k = coset_decompose(diag(p, -mu[0], -mu[1]))
        back = target.rho(k.inverse())
        columns = [matmul_mod(back, image.coefficient(rep), p) for image in images]
        values[mu] = np.stack(columns, axis=1)
    theta = HeckeKernel(source, target, values)
    logger.debug("%s * %s has support %s", phi.support, psi.support, theta.support)
    return theta


def explicit_coset_sum(phi: HeckeKernel) -> InductionElement:
    """
    phi * [1, v] for v the lowest weight vector of the source, as the sum
    of [w a t^-1, phi(t) v] over w in W_nu / (W_nu meet W_lambda) and a in
    (w^-1 I w meet lower unipotent(O)) / t^-1 (lower unipotent(O)) t.

    Only kernels with a single support diag(p^a, p^b) = t are accepted.
    """
    if len(phi.support) != 1:
        raise HeckeException(f"expected a kernel with one support, got {phi.support}")
    (a, b), = phi.support
    p = phi.p
    t_inv = diag(p, -a, -b)
    v_prime = matmul_mod(phi.value((a, b)), phi.source.lowest_vector(), p)

    # W_lambda is W for central lambda, W_nu is W when nu is orthogonal to the coroot.
    cosets = [(identity(p), [z for z in range(p**(a - b))])]
    if a != b and phi.source.r == 0:
        cosets.append((weyl_element(p), [p * j for j in range(p**(a - b - 1))]))

    out = InductionElement(phi.target)
    for w, zs in cosets:
        for z in zs:
            out.add(w @ lower_unipotent(p, z) @ t_inv, v_prime)
    return out
