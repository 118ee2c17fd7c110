import numpy as np

from hecke import lattice


def test_exgcd_row_operation():
    m = lattice.exgcd(4, 6)
    assert list(m.dot(lattice.as_vector([4, 6]))) == [2, 0]
    assert m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] == 1


def test_exgcd_divisible_keeps_first_row_clean():
    m = lattice.exgcd(3, 9)
    assert m[0, 1] == 0
    assert list(m.dot(lattice.as_vector([3, 9]))) == [3, 0]


def test_normal_form_factors():
    a = lattice.as_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    s, d, t, sinv, tinv = lattice.normal_form(a)
    assert (s.dot(d).dot(t) == a).all()
    assert (sinv.dot(s) == np.eye(3, dtype=object)).all()
    assert (t.dot(tinv) == np.eye(3, dtype=object)).all()
    for i in range(3):
        for j in range(3):
            if i != j:
                assert d[i, j] == 0


def test_kernel_of_gl3_roots():
    a = lattice.as_matrix([[1, -1, 0], [0, 1, -1]])
    k = lattice.kernel(a)
    assert k.shape == (3, 1)
    assert (a.dot(k) == 0).all()
    assert abs(k[0, 0]) == 1


def test_index_in_saturation():
    assert lattice.index_in_saturation(lattice.as_matrix([[2], [0]])) == 2
    assert lattice.index_in_saturation(lattice.as_matrix([[1], [-1]])) == 1


def test_solve_integral():
    assert lattice.solve_integral(lattice.as_matrix([[2]]), [3]) is None
    assert lattice.solve_integral(lattice.as_matrix([[2]]), [4]) == (2,)
    x = lattice.solve_integral(lattice.as_matrix([[1, -1]]), [5])
    assert x[0] - x[1] == 5


def test_hermite_basis():
    assert lattice.hermite_basis([(2, 0), (1, 1)], 2) == ((1, 1), (0, 2))
    assert lattice.hermite_basis([(0, 0)], 2) == ()
    assert lattice.hermite_basis([(-1, 0, 0)], 3) == ((1, 0, 0),)
    assert lattice.hermite_basis([(0, 0, 3), (0, 2, 1)], 3) == ((0, 2, 1), (0, 0, 3))
    assert lattice.hermite_basis([(2, 4), (3, 6)], 2) == ((1, 2),)
    assert lattice.hermite_basis([(3, 5), (0, 2)], 2) == ((3, 1), (0, 2))
    assert lattice.hermite_basis([], 2) == ()


def test_orthogonal_complement():
    assert lattice.orthogonal_complement([(1, -1, 0)], 3) == ((1, 1, 0), (0, 0, 1))
    assert lattice.orthogonal_complement([], 2) == ((1, 0), (0, 1))


def test_coordinates_and_contains():
    basis = ((1, 1, 0), (0, 0, 1))
    assert lattice.coordinates(basis, (2, 2, 5)) == (2, 5)
    assert lattice.coordinates(basis, (1, 0, 0)) is None
    assert lattice.contains((), (0, 0))
    assert not lattice.contains((), (1, 0))


def test_canonical_point_prefers_nonnegative():
    directions = lattice.as_matrix([[1]])
    assert lattice.canonical_point((-1,), directions) == (0,)
    assert lattice.canonical_point((5, 4), lattice.as_matrix([[1], [1]])) == (1, 0)
