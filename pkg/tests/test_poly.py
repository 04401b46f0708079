import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilspec.poly import (
    Poly,
    SturmChain,
    count_real_roots,
    isolate_real_root,
    lagrange_interpolate,
    poly_gcd,
    squarefree_part,
)

smallfrac = st.fractions(min_value=-10, max_value=10, max_denominator=6)
polys = st.lists(smallfrac, min_size=0, max_size=6).map(Poly)


def test_degree_and_normalization():
    assert Poly((1, 2, 0, 0)).degree == 1
    assert Poly(()).is_zero()
    assert Poly((0, 0)).is_zero()
    assert Poly((3,)).degree == 0


def test_evaluation():
    p = Poly((6, -5, 1))  # x^2 - 5x + 6
    assert p(2) == 0 and p(3) == 0 and p(0) == 6
    assert p(Fraction(1, 2)) == Fraction(15, 4)


def test_from_roots_and_str():
    p = Poly.from_roots([2, 3])
    assert p == Poly((6, -5, 1))
    assert str(p) == "x^2-5*x+6"
    assert str(Poly((0, -1))) == "-x"
    assert str(Poly.zero()) == "0"
    assert str(Poly((Fraction(1, 2), 1))) == "x+1/2"


@given(polys, polys)
def test_mul_degree_additive(a, b):
    c = a * b
    if a.is_zero() or b.is_zero():
        assert c.is_zero()
    else:
        assert c.degree == a.degree + b.degree


@given(polys, polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert a == q * b + r
    assert r.is_zero() or r.degree < b.degree


@given(polys, polys)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
    else:
        assert (a % g).is_zero() and (b % g).is_zero()
        assert g.is_monic()


def test_reversed():
    p = Poly((6, -5, 1))
    assert p.reversed() == Poly((1, -5, 6))
    assert Poly((0, 1)).reversed() == Poly((1, 0))  # x -> 1 (degree drop)


def test_squarefree_part():
    p = Poly.from_roots([2, 2, 3])
    assert squarefree_part(p) == Poly.from_roots([2, 3])


def test_sturm_counting_known_roots():
    p = Poly.from_roots([-3, Fraction(1, 2), 2, 7])
    assert SturmChain.of(p).count_all() == 4
    assert count_real_roots(p, 0, 3) == 2
    assert count_real_roots(p, -1, 1) == 1
    assert count_real_roots(p, 3, 6) == 0
    # multiplicities do not change counts
    assert count_real_roots(p * p, -1, 1) == 1


def test_sturm_no_real_roots():
    assert SturmChain.of(Poly((1, 0, 1))).count_all() == 0


def test_count_open_interval_excludes_endpoints():
    p = Poly.from_roots([1, 2])
    assert count_real_roots(p, 1, 2) == 0
    assert count_real_roots(p, 0, 2) == 1


def test_isolate_real_root_sign_change():
    p = Poly.from_roots([Fraction(2, 5), 3, -4])
    lo, hi = isolate_real_root(p, -1, 1)
    assert -1 < lo < Fraction(2, 5) < hi < 1
    q = squarefree_part(p)
    assert q(lo) * q(hi) < 0


def test_isolate_hits_exact_root():
    p = Poly.from_roots([Fraction(1, 2)])  # bisection of (0,1) lands on it
    lo, hi = isolate_real_root(p, 0, 1)
    assert lo < Fraction(1, 2) < hi
    assert p(lo) * p(hi) < 0


def test_isolate_requires_a_root():
    with pytest.raises(ValueError):
        isolate_real_root(Poly.from_roots([5]), -1, 1)


def test_lagrange_interpolation_roundtrip():
    rng = random.Random(7)
    p = Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5)])
    pts = [(Fraction(x), p(x)) for x in range(-2, 3)]
    assert lagrange_interpolate(pts) == p
