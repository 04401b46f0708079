import random
from fractions import Fraction

import pytest

from nilspec import (
    Poly,
    char_poly,
    companion,
    det,
    eye,
    image_basis,
    intertwiner_space,
    kernel_basis,
    qmat,
    rank,
    verify_expend5,
)
from nilspec.linalg import (
    NotExpandingInput,
    NotUnimodularInput,
    mat_equal,
    rref,
    solve,
    zeros,
)
from helpers import expanding_int_matrix, rand_matrix


def test_rank_examples():
    assert rank(eye(2)) == 2
    assert rank(zeros(2, 2)) == 0
    assert rank(qmat([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(eye(3)) == []
    assert len(kernel_basis(zeros(2, 3))) == 3
    (v,) = kernel_basis(qmat([[1, 1]]))
    assert list(v) == [1, -1]


def test_kernel_vectors_annihilate():
    rng = random.Random(0)
    for _ in range(30):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        for v in kernel_basis(m):
            assert all(x == 0 for x in m @ v)


def test_rank_nullity():
    rng = random.Random(1)
    for _ in range(60):
        m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        assert rank(m) + len(kernel_basis(m)) == m.shape[1]


def test_image_examples():
    cols = image_basis(eye(3))
    assert [list(c) for c in cols] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert image_basis(zeros(3, 2)) == []
    (v,) = image_basis(qmat([[1], [2]]))
    assert list(v) == [1, 2]


def test_image_size_is_rank():
    rng = random.Random(2)
    for _ in range(30):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert len(image_basis(m)) == rank(m)


def test_solve():
    a = qmat([[1, 2], [3, 4]])
    x = solve(a, qmat([[5], [6]])[:, 0])
    assert list(a @ x) == [5, 6]
    assert solve(qmat([[1, 1], [1, 1]]), qmat([[0], [1]])[:, 0]) is None


def test_det():
    assert det(qmat([[2, 1], [1, 1]])) == 1
    assert det(qmat([[1, 2], [2, 4]])) == 0
    assert det(eye(4)) == 1


def test_char_poly_examples():
    assert char_poly(qmat([[2, 0], [0, 3]])) == Poly((6, -5, 1))
    assert char_poly(qmat([[0, 1], [-1, 0]])) == Poly((1, 0, 1))
    assert char_poly(qmat([[2, 1], [1, 1]])) == Poly((1, -3, 1))
    assert char_poly(zeros(0, 0)) == Poly.one()


def test_char_poly_transpose_invariant():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = rand_matrix(rng, n, n)
        assert char_poly(m) == char_poly(m.T.copy())


def test_char_poly_of_companion():
    p = Poly((6, -5, 1))
    assert char_poly(companion(p)) == p
    p = Poly((-1, 2, -7, 1))
    assert char_poly(companion(p)) == p


def test_char_poly_non_square_rejected():
    with pytest.raises(ValueError):
        char_poly(zeros(2, 3))


def test_intertwiner_scalar_case():
    (h,) = intertwiner_space(qmat([[2]]), qmat([[2]]))
    assert h[0, 0] == 1


def test_intertwiner_empty_case():
    assert intertwiner_space(qmat([[2, 0], [0, 2]]), qmat([[1, 1], [0, 1]])) == []


def test_intertwiner_matrix_unit_case():
    basis = intertwiner_space(qmat([[2, 0], [0, 3]]), qmat([[2, 0], [0, 5]]))
    assert len(basis) == 1
    assert [list(r) for r in basis[0]] == [[1, 0], [0, 0]]


def test_intertwiner_basis_satisfies_equation():
    rng = random.Random(4)
    for _ in range(25):
        n, m = rng.randint(1, 3), rng.randint(1, 3)
        f = rand_matrix(rng, n, n)
        g = rand_matrix(rng, m, m)
        for h in intertwiner_space(f, g):
            assert mat_equal(h @ f, g @ h)


def test_verify_expend5_examples():
    assert verify_expend5(qmat([[2, 0], [0, 2]]), eye(2)).confirmed_empty
    assert verify_expend5(qmat([[2]]), qmat([[1]])).confirmed_empty
    with pytest.raises(NotUnimodularInput):
        verify_expend5(qmat([[2]]), qmat([[2]]))
    with pytest.raises(NotExpandingInput):
        verify_expend5(qmat([[1]]), qmat([[1]]))


def test_verify_expend5_rejects_rational_input():
    with pytest.raises(ValueError):
        verify_expend5(qmat([[Fraction(5, 2)]]), qmat([[1]]))


def test_expanding_generator_is_expanding():
    from nilspec import is_expanding_matrix

    rng = random.Random(5)
    m = expanding_int_matrix(rng, 3)
    assert is_expanding_matrix(m).expanding
