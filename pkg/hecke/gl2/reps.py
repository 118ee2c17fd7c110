"""
Irreducible representations Sym^r (x) det^m of GL2(F_p) and linear
algebra over F_p.

GL2(F_p) acts on homogeneous polynomials by (g f)(x, y) = f((x, y) g),
on the basis e_i = x^(r-i) y^i. The lower unitriangular group fixes
y^r, the lowest weight vector, of weight (m, m + r).
"""
import functools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from hecke.exceptions import HeckeException, WindowViolated
from hecke.gl2.padic import PAdicMatrix

LOWBAR_U = "lowbar-U"
N_LAMBDA = "N-lambda"


def mod_p(a: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(a % p, dtype=np.int64)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return mod_p(a.dot(b), p)


def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    r = mod_p(a, p).copy()
    rows, cols = r.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = [i for i in range(row, rows) if r[i, col] != 0]
        if not candidates:
            continue
        i = candidates[0]
        r[[row, i]] = r[[i, row]]
        r[row] = r[row] * pow(int(r[row, col]), -1, p) % p
        for j in range(rows):
            if j != row and r[j, col] != 0:
                r[j] = (r[j] - r[j, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def nullspace_mod(a: np.ndarray, p: int) -> list[np.ndarray]:
    """
    Basis of {x : a x = 0} over F_p, one vector per free column.
    """
    n = a.shape[1]
    r, pivots = rref_mod(a, p)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        x = np.zeros(n, dtype=np.int64)
        x[f] = 1
        for row, col in enumerate(pivots):
            x[col] = -r[row, f] % p
        basis.append(x)
    return basis


def _binomial_row(u: int, v: int, n: int, p: int) -> list[int]:
    # Coefficients of (u x + v y)^n by power of y.
    return [math.comb(n, s) * pow(u, n - s, p) * pow(v, s, p) % p for s in range(n + 1)]


@functools.lru_cache(maxsize=8192)
def _action_matrix(r: int, m: int, p: int, entries: tuple[int, int, int, int]) -> np.ndarray:
    a, b, c, d = entries
    det = (a * d - b * c) % p
    out = np.zeros((r + 1, r + 1), dtype=np.int64)
    for i in range(r + 1):
        # x -> a x + c y, y -> b x + d y
        column = np.convolve(_binomial_row(a, c, r - i, p), _binomial_row(b, d, i, p)) % p
        out[:, i] = column
    out = out * pow(det, m, p) % p
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class FiniteRep:
    r: int
    m: int
    p: int

    def __post_init__(self):
        if not 0 <= self.r <= self.p - 1:
            raise WindowViolated(
                f"Sym^{self.r} is outside the window 0 <= r <= {self.p - 1} for p = {self.p}"
            )
        object.__setattr__(self, "m", self.m % (self.p - 1))

    @property
    def dim(self) -> int:
        return self.r + 1

    @property
    def lowest_weight(self) -> tuple[int, int]:
        return self.m, self.m + self.r

    def lowest_vector(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.r] = 1
        return v

    def act(self, entries: Sequence[int]) -> np.ndarray:
        """
        Matrix of an element of GL2(F_p) given by its entries (a, b, c, d).
        """
        entries = tuple(int(x) % self.p for x in entries)
        a, b, c, d = entries
        if (a * d - b * c) % self.p == 0:
            raise HeckeException(f"{entries} is not invertible mod {self.p}")
        return _action_matrix(self.r, self.m, self.p, entries)

    def rho(self, k: PAdicMatrix) -> np.ndarray:
        if k.p != self.p:
            raise HeckeException(f"element over Q_{k.p} acting on a rep over F_{self.p}")
        return self.act(k.reduce())

    def twist(self, n: int = 1) -> "FiniteRep":
        return FiniteRep(self.r, self.m + n, self.p)

    def to_dict(self) -> dict:
        return {"r": self.r, "m": self.m, "p": self.p}

    def __str__(self) -> str:
        return f"Sym^{self.r} x det^{self.m}"


def finite_rep_invariants(rep: FiniteRep, which: str = LOWBAR_U,
                          lam: Sequence[int] = (1, 0)) -> list[np.ndarray]:
    """
    Basis of the vectors fixed by the lower unitriangular group, or by
    the lower unipotent radical attached to lam, which is trivial for
    central lam.
    """
    if which not in (LOWBAR_U, N_LAMBDA):
        raise HeckeException(f"unknown invariant subgroup {which}")
    identity = np.eye(rep.dim, dtype=np.int64)
    if which == N_LAMBDA and lam[0] == lam[1]:
        return list(identity)
    # [[1, 0], [1, 1]] generates the lower unitriangular group of GL2(F_p).
    generator = rep.act((1, 0, 1, 1))
    return nullspace_mod(generator - identity, rep.p)
