import random

import pytest

from nilspec import det, qmat, smith_normal_form
from nilspec.snf import is_unimodular, random_unimodular
from helpers import rand_int_matrix


def snf_invariants(m):
    diag, left, right = smith_normal_form(m)
    a = qmat(m)
    prod = qmat(left) @ a @ qmat(right)
    for i in range(prod.shape[0]):
        for j in range(prod.shape[1]):
            expected = diag[i] if i == j and i < len(diag) else 0
            assert prod[i, j] == expected
    assert abs(det(qmat(left))) == 1
    assert abs(det(qmat(right))) == 1
    for a_, b_ in zip(diag, diag[1:]):
        if a_ == 0:
            assert b_ == 0
        else:
            assert b_ % a_ == 0
    assert all(d >= 0 for d in diag)
    return diag


def test_identity():
    assert snf_invariants([[1, 0], [0, 1]]) == [1, 1]


def test_already_diagonal():
    assert snf_invariants([[2, 0], [0, 4]]) == [2, 4]


def test_hand_elimination_example():
    # gcd of entries 2 and |det| = 8 force invariant factors (2, 4)
    assert snf_invariants([[2, 4], [6, 8]]) == [2, 4]


def test_swapped_divisibility():
    assert snf_invariants([[4, 0], [0, 2]]) == [2, 4]


def test_zero_matrix():
    assert snf_invariants([[0, 0, 0], [0, 0, 0]]) == [0, 0]


def test_rank_deficient():
    assert snf_invariants([[1, 2], [2, 4]]) == [1, 0]


def test_non_integer_rejected():
    from fractions import Fraction

    with pytest.raises(ValueError):
        smith_normal_form([[Fraction(1, 2)]])


def test_randomized_invariants():
    rng = random.Random(11)
    for _ in range(60):
        m = rand_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        snf_invariants(m)


def test_random_unimodular_is_unimodular():
    rng = random.Random(12)
    for n in (1, 2, 3, 4, 5):
        assert is_unimodular(random_unimodular(n, rng))
