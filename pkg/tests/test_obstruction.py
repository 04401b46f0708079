import pytest

from nilspec import (
    AttractorPairSpec,
    BettiVector,
    Case1Contradiction,
    InputInconsistent,
    SphereForced,
    gysin_boundary_betti,
    mv_surjectivity_gap,
    sphere_theorem_check,
    toric_corollary_check,
)


def test_betti_vector_validation():
    BettiVector([1, 2, 1])
    BettiVector([1])
    with pytest.raises(ValueError, match="duality"):
        BettiVector([1, 2, 3, 1])
    with pytest.raises(ValueError, match="b_0"):
        BettiVector([2, 2])
    with pytest.raises(ValueError, match="non-negative"):
        BettiVector([1, -1, 1])
    with pytest.raises(ValueError):
        BettiVector([])


def test_betti_helpers():
    assert list(BettiVector.torus(3)) == [1, 3, 3, 1]
    assert list(BettiVector.sphere(4)) == [1, 0, 0, 0, 1]
    assert BettiVector([1, 2, 1]).get(-1) == 0
    assert BettiVector([1, 2, 1]).get(9) == 0


def test_gysin_examples():
    assert list(gysin_boundary_betti(BettiVector([1, 2, 1]), 2)) == [1, 3, 3, 1]
    assert list(gysin_boundary_betti(BettiVector([1, 1]), 2)) == [1, 2, 1]
    for q in (2, 3, 4, 5):
        out = gysin_boundary_betti(BettiVector([1]), q)
        assert list(out) == [1] + [0] * (q - 2) + [1]
    with pytest.raises(ValueError):
        gysin_boundary_betti(BettiVector([1, 1]), 1)


def test_gysin_output_satisfies_duality():
    # the BettiVector constructor re-checks duality, so surviving
    # construction is the assertion; exercise a spread of inputs
    for p in range(1, 5):
        for q in range(2, 5):
            gysin_boundary_betti(BettiVector.torus(p), q)
    gysin_boundary_betti(BettiVector([1, 0, 22, 0, 1]), 3)


def test_spec_validation():
    with pytest.raises(ValueError, match="fiber dimension below 2"):
        AttractorPairSpec(4, 1, 2, BettiVector.ones(4), BettiVector.ones(3))
    with pytest.raises(ValueError, match="top dimension"):
        AttractorPairSpec(4, 2, 2, BettiVector.ones(2), BettiVector.ones(3))
    with pytest.raises(ValueError, match="dimension 0 < 1"):
        AttractorPairSpec(3, 2, 3, BettiVector.ones(2), BettiVector.ones(1))


def test_gap_report_q3():
    spec = AttractorPairSpec(6, 3, 3, BettiVector.ones(4), BettiVector.ones(4))
    report = mv_surjectivity_gap(spec, spec.p1)
    assert report.kernel_applicable
    assert report.image_bound == 1 and report.required == 2
    assert report.impossible


def test_gap_report_q2_no_kernel():
    spec = AttractorPairSpec(6, 2, 2, BettiVector.ones(5), BettiVector.ones(5))
    report = mv_surjectivity_gap(spec, 1)
    assert not report.kernel_applicable and report.forced_kernel == 0
    assert not report.impossible  # 1 + 1 source vs 1 + 1 required


def test_gap_report_toric_first_betti():
    t = BettiVector.torus(2)
    spec = AttractorPairSpec(4, 2, 2, t, t)
    report = mv_surjectivity_gap(spec, 1)
    assert report.source_dim == 3 and report.required == 4
    assert report.impossible


def test_sphere_check_tori_inconsistent():
    t = BettiVector.torus(2)
    verdict = sphere_theorem_check(AttractorPairSpec(4, 2, 2, t, t))
    assert isinstance(verdict, InputInconsistent)
    assert verdict.degree == 1


def test_sphere_check_all_ones():
    for n in range(3, 13):
        spec = AttractorPairSpec(n, 2, 2, BettiVector.ones(n - 1),
                                 BettiVector.ones(n - 1))
        verdict = sphere_theorem_check(spec)
        assert isinstance(verdict, SphereForced)
        assert list(verdict.manifold_betti) == [1] + [0] * (n - 1) + [1]
        # the recorded chain collapses to equalities
        assert all(slack == 0 for _, slack in verdict.chain)


def test_sphere_check_q3_contradiction():
    for n in (4, 5, 6, 7):
        spec = AttractorPairSpec(n, 2, 3, BettiVector.ones(n - 1),
                                 BettiVector.ones(n - 2))
        verdict = sphere_theorem_check(spec)
        assert isinstance(verdict, Case1Contradiction)
        assert verdict.degree == n - 2  # p1 for the ordered pair
        assert verdict.image_bound < verdict.required


def test_sphere_check_orders_pair():
    # q-ordering means passing (q1, q2) = (3, 2) behaves like (2, 3)
    spec = AttractorPairSpec(5, 3, 2, BettiVector.ones(3), BettiVector.ones(4))
    verdict = sphere_theorem_check(spec)
    assert isinstance(verdict, Case1Contradiction)
    assert verdict.degree == 3


def test_sphere_check_boundary_mismatch():
    # q1 = q2 = 2 but different bases: boundaries disagree layer by layer
    t = BettiVector.torus(2)
    s = BettiVector([1, 0, 1])
    verdict = sphere_theorem_check(AttractorPairSpec(4, 2, 2, t, s))
    assert isinstance(verdict, InputInconsistent)
    assert "boundary" in verdict.reason


def test_toric_corollary():
    assert toric_corollary_check(4).obstructed
    assert not toric_corollary_check(3).obstructed
    r = toric_corollary_check(10)
    assert r.obstructed and r.middle_dim == 9 and r.required == 16
    with pytest.raises(ValueError):
        toric_corollary_check(2)
