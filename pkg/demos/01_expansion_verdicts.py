"""Expansion verdicts for polynomials and matrices.

A linear map is expanding when every eigenvalue has modulus strictly
greater than 1.  The decision here is exact: rational arithmetic end to
end, and every negative answer carries evidence you can re-check with a
couple of sign evaluations.
"""

from fractions import Fraction

from nilspec import Poly, is_expanding_matrix, is_expanding_poly, qmat


def show(p):
    v = is_expanding_poly(p)
    print(f"  {str(p):>24}   {v.describe()}")


print("Polynomials:")
show(Poly.from_roots([2, 3]))                      # comfortably expanding
show(Poly.from_roots([2, Fraction(1, 2)]))         # reciprocal pair, one inside
show(Poly((1, -3, 1)))                             # roots (3 +- sqrt 5)/2
show(Poly((1, 0, 1)))                              # +-i, on the circle
show(Poly((1, -1)))                                # root exactly 1
show(Poly((0, 1)))                                 # root 0

print()
print("The evidence is checkable: for x^2-3x+1 the verdict isolates the")
print("small root in a sign-change interval:")
v = is_expanding_poly(Poly((1, -3, 1)))
lo, hi = v.interval
w = v.witness_poly
print(f"  interval [{lo}, {hi}],  witness({lo}) = {w(lo)},  "
      f"witness({hi}) = {w(hi)}")

print()
print("Matrices go through their characteristic polynomial:")
cat_map = qmat([[2, 1], [1, 1]])
print("  [[2,1],[1,1]]:", is_expanding_matrix(cat_map).describe())
print("  diag(2,-3):   ", is_expanding_matrix(qmat([[2, 0], [0, -3]])).describe())

print()
print("Complex eigenvalues are covered too.  This matrix rotates and")
print("scales by sqrt(1/2), so nothing is real but everything is inside:")
rot = qmat([[Fraction(1, 2), Fraction(1, 2)], [Fraction(-1, 2), Fraction(1, 2)]])
print("  ", is_expanding_matrix(rot).describe())
