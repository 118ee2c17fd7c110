"""
Exact integer lattice algorithms.

Matrices are numpy arrays of dtype=object holding Python ints, so no
value is ever rounded. Hermite forms come from sympy. Vectors that
leave this module are plain tuples.
"""
import functools
import itertools
import logging
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

logger = logging.getLogger("hecke.lattice")

Vector = tuple[int, ...]

# Largest number of points probed when choosing a canonical lattice point.
CANONICAL_SEARCH_LIMIT = 250000


def as_matrix(rows: Iterable[Sequence[int]], ncols: int = 0) -> np.ndarray:
    rows = [[int(x) for x in row] for row in rows]
    if not rows:
        return np.zeros((0, ncols), dtype=object)
    return np.array(rows, dtype=object)


def as_vector(values: Iterable[int]) -> np.ndarray:
    return np.array([int(x) for x in values], dtype=object)


def to_tuple(values) -> Vector:
    return tuple(int(x) for x in values)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(int(x) * int(y) for x, y in zip(a, b))


def exgcd(a: int, b: int) -> np.ndarray:
    """
    Extended GCD as a row operation.

    Returns a 2x2 integer matrix M of determinant 1 with
    M @ [a, b] == [gcd(a, b), 0]. If a divides b, M[0, 1] is 0.
    """
    if a == 0 and b == 0:
        return np.eye(2, dtype=object)

    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign

    # Each row is (value, coefficient of a, coefficient of b).
    top, bottom = [b, 0, 1], [a, 1, 0]
    while bottom[0] != 0:
        q = top[0] // bottom[0]
        top = [t - q * s for t, s in zip(top, bottom)]
        top, bottom = bottom, top

    g, x, y = top
    return np.array(
        [
            [x * a_sign, y * b_sign],
            [-b_sign * b // g, a_sign * a // g],
        ],
        dtype=object,
    )


def _inv_2x2_det1(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=object)


def _key(a: np.ndarray) -> tuple:
    return a.shape, tuple(int(x) for x in a.flat)


@functools.lru_cache(maxsize=4096)
def _normal_form_cached(key: tuple):
    shape, flat = key
    a = np.array(flat, dtype=object).reshape(shape)

    d = a.copy()
    s, t = np.eye(shape[0], dtype=object), np.eye(shape[1], dtype=object)
    sinv, tinv = s.copy(), t.copy()

    def clear_row(i):
        if (d[i, i + 1:] == 0).all():
            return False
        for j in range(i + 1, d.shape[1]):
            m = exgcd(d[i, i], d[i, j]).T
            d[:, [i, j]] = d[:, [i, j]].dot(m)
            t[[i, j]] = _inv_2x2_det1(m).dot(t[[i, j]])
            tinv[:, [i, j]] = tinv[:, [i, j]].dot(m)
        return True

    def clear_col(i):
        if (d[i + 1:, i] == 0).all():
            return False
        for j in range(i + 1, d.shape[0]):
            m = exgcd(d[i, i], d[j, i])
            d[[i, j]] = m.dot(d[[i, j]])
            s[:, [i, j]] = s[:, [i, j]].dot(_inv_2x2_det1(m))
            sinv[[i, j]] = m.dot(sinv[[i, j]])
        return True

    for i in range(min(shape)):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass

    return s, d, t, sinv, tinv


def normal_form(a: np.ndarray):
    """
    Diagonal normal form without the divisibility chain of Smith form.

    Returns (S, D, T, Sinv, Tinv) with A == S @ D @ T, D diagonal of the
    shape of A, and S, T unimodular with exact inverses. The factors are
    cached and shared, so callers must not mutate them.
    """
    return _normal_form_cached(_key(a))


def diagonal(d: np.ndarray) -> list[int]:
    return [int(d[i, i]) for i in range(min(d.shape))]


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    _, d, _, _, _ = normal_form(a)
    return sum(1 for x in diagonal(d) if x != 0)


def kernel(a: np.ndarray) -> np.ndarray:
    """
    Columns form a basis of the integer kernel {x : A x = 0}.
    """
    n = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(n, dtype=object)
    _, d, _, _, tinv = normal_form(a)
    diag = diagonal(d) + [0] * (n - min(d.shape))
    mask = [x == 0 for x in diag]
    return tinv[:, mask]


def index_in_saturation(a: np.ndarray) -> int:
    """
    Index of the column span of A inside its saturation.
    """
    if a.size == 0:
        return 1
    _, d, _, _, _ = normal_form(a)
    index = 1
    for x in diagonal(d):
        if x != 0:
            index *= abs(x)
    return index


def split_saturation(a: np.ndarray):
    """
    Split the ambient lattice along the saturation of the column span
    of A.

    Returns (S, Sinv, saturated, complement): the columns of S listed in
    ``saturated`` span the saturation, the remaining ones span a
    complement, and Sinv converts ambient coordinates into that basis.
    """
    n = a.shape[0]
    if a.size == 0:
        eye = np.eye(n, dtype=object)
        return eye, eye, [], list(range(n))
    s, d, _, sinv, _ = normal_form(a)
    diag = diagonal(d) + [0] * (n - min(d.shape))
    saturated = [i for i in range(n) if diag[i] != 0]
    complement = [i for i in range(n) if diag[i] == 0]
    return s, sinv, saturated, complement


def solve_integral(a: np.ndarray, b: Sequence[int]) -> Optional[Vector]:
    """
    Some integer x with A x = b, or None when there is none.
    """
    m, n = a.shape
    if m == 0:
        return (0,) * n
    _, d, _, sinv, tinv = normal_form(a)
    y = sinv.dot(as_vector(b))
    z = [0] * n
    diag = diagonal(d)
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % di != 0:
                return None
            z[i] = y[i] // di
    return to_tuple(tinv.dot(as_vector(z)))


def hermite_basis(rows: Iterable[Sequence[int]], n: int) -> tuple[Vector, ...]:
    """
    Row Hermite normal form of the lattice spanned by ``rows``: positive
    pivots, entries above a pivot reduced into [0, pivot), zero rows
    dropped.

    sympy computes the column form with trailing pivots, so the
    generators go in as columns with their coordinates reversed.
    """
    vectors = [[int(x) for x in reversed(row)] for row in rows]
    if not vectors:
        return ()
    # n zero columns make sympy visit every coordinate.
    k = len(vectors)
    columns = Matrix(n, k + n, lambda i, j: vectors[j][i] if j < k else 0)
    h = hermite_normal_form(columns)
    basis = [tuple(int(h[n - 1 - c, j]) for c in range(n)) for j in range(h.cols)]
    return tuple(reversed(basis))


def orthogonal_complement(rows: Sequence[Sequence[int]],
                          n: int) -> tuple[Vector, ...]:
    """
    Hermite basis of {x in Z^n : <r, x> = 0 for every r in rows}.
    """
    cols = kernel(as_matrix(rows, n))
    return hermite_basis(
        [to_tuple(cols[:, j]) for j in range(cols.shape[1])], n
    )


def basis_columns(basis: Sequence[Sequence[int]], n: int) -> np.ndarray:
    if not basis:
        return np.zeros((n, 0), dtype=object)
    return as_matrix(basis).T.copy()


def coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> Optional[Vector]:
    """
    Coordinates of v in an independent basis, or None if v is not in
    the lattice spanned by it.
    """
    n = len(v)
    if not basis:
        return () if all(x == 0 for x in v) else None
    return solve_integral(basis_columns(basis, n), v)


def contains(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    return coordinates(basis, v) is not None


def combine(basis: Sequence[Sequence[int]], coeffs: Sequence[int], n: int) -> Vector:
    out = [0] * n
    for c, b in zip(coeffs, basis):
        for i in range(n):
            out[i] += c * b[i]
    return tuple(out)


def canonical_point(x0: Sequence[int], directions: np.ndarray) -> Vector:
    """
    Canonical point of the affine lattice x0 + Z<directions>.

    The lexicographically smallest point with nonnegative coordinates is
    chosen; if none is found the point of smallest absolute sum (ties
    broken lexicographically) is used. The search runs over a box of
    coefficients sized by x0.
    """
    x0 = to_tuple(x0)
    k = directions.shape[1]
    if k == 0:
        return x0
    dirs = [to_tuple(directions[:, j]) for j in range(k)]
    radius = sum(abs(x) for x in x0) + 2
    while (2 * radius + 1)**k > CANONICAL_SEARCH_LIMIT and radius > 1:
        radius -= 1

    best_nonneg = None
    best_any = None
    for coeffs in itertools.product(range(-radius, radius + 1), repeat=k):
        point = list(x0)
        for c, d in zip(coeffs, dirs):
            if c:
                for i, di in enumerate(d):
                    point[i] += c * di
        point = tuple(point)
        if all(x >= 0 for x in point):
            if best_nonneg is None or point < best_nonneg:
                best_nonneg = point
        score = (sum(abs(x) for x in point), point)
        if best_any is None or score < best_any:
            best_any = score

    if best_nonneg is not None:
        return best_nonneg
    logger.debug("No nonnegative point near %s, using smallest point", x0)
    return best_any[1]
