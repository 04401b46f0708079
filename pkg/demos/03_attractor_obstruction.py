"""Betti-number bookkeeping for a pair of solenoid-type attractors.

Suppose a closed oriented n-manifold is filled by an attractor and a
repeller, each the nested image of a disk bundle over a closed oriented
base that carries an expanding map.  Every topological ingredient of
that situation leaves a dimension-count shadow, and the shadows alone
are already decisive.  This demo replays the counts.
"""

from nilspec import (
    AttractorPairSpec,
    BettiVector,
    gysin_boundary_betti,
    mv_surjectivity_gap,
    sphere_theorem_check,
    toric_corollary_check,
)

print("Boundary of a disk bundle with zero Euler class: each degree is")
print("b_l(base) + b_(l-q+1)(base).  Over the 2-torus with q = 2:")
t2 = BettiVector.torus(2)
print("  base", list(t2), "-> boundary", list(gysin_boundary_betti(t2, 2)))
print("Over a point with q = 3 the boundary is a 2-sphere:")
print("  base [1] -> boundary", list(gysin_boundary_betti(BettiVector([1]), 3)))

print()
print("Fiber dimension 3 or more kills the gluing map's surjectivity:")
spec = AttractorPairSpec(6, 3, 3, BettiVector.ones(4), BettiVector.ones(4))
gap = mv_surjectivity_gap(spec, spec.p1)
print(f"  n=6, q=3 pair, degree {spec.p1}: image bound {gap.image_bound} "
      f"< required {gap.required}")
print("  verdict:", sphere_theorem_check(spec).machine())

print()
print("With both fibers 2-dimensional the inequality chain either fails")
print("(no such pair) or collapses everything to one:")
tori = AttractorPairSpec(4, 2, 2, t2, t2)
print("  two 2-torus bases in dimension 4:",
      sphere_theorem_check(tori).machine())
ones = AttractorPairSpec(6, 2, 2, BettiVector.ones(5), BettiVector.ones(5))
print("  all-ones bases in dimension 6:   ",
      sphere_theorem_check(ones).machine())

print()
print("The torus-base count in each ambient dimension:")
for n in (3, 4, 5, 8):
    print(" ", toric_corollary_check(n).describe())
