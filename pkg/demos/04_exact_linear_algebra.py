"""The exact linear algebra underneath: no floats anywhere.

Rank, kernels, characteristic polynomials, Smith normal form, and
Sylvester-type intertwiner equations, all over the rationals, all
deterministic.
"""

from fractions import Fraction

from nilspec import (
    char_poly,
    det,
    eigen_product_multiset,
    exterior_power,
    intertwiner_space,
    kernel_basis,
    qmat,
    smith_normal_form,
    verify_expend5,
)

m = qmat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
print("kernel of the classic singular 3x3:",
      [list(v) for v in kernel_basis(m)])
print("char poly:", char_poly(m))

print()
print("Smith normal form with unimodular transforms:")
diag, left, right = smith_normal_form([[2, 4], [6, 8]])
print("  invariant factors:", diag)
print("  |det left| =", abs(det(qmat(left))), " |det right| =",
      abs(det(qmat(right))))

print()
print("Compound matrices give induced maps on exterior powers; the top")
print("one is the determinant:")
a = qmat([[2, 1], [0, 3]])
print("  degree 2 of [[2,1],[0,3]]:", exterior_power(a, 2)[0, 0])

print()
print("Eigenvalue products without ever computing eigenvalues: the monic")
print("polynomial whose roots are all pairwise products:")
p = char_poly(qmat([[2, 0], [0, 3]]))
print(f"  products of roots of ({p}) with itself:",
      eigen_product_multiset(p, p))

print()
print("Maps intertwining diag(2,3) with diag(2,5) must concentrate where")
print("the eigenvalues agree:")
basis = intertwiner_space(qmat([[2, 0], [0, 3]]), qmat([[2, 0], [0, 5]]))
print("  basis:", [[list(r) for r in h] for h in basis])

print()
print("And an expanding integer map can never intertwine nontrivially")
print("with a unimodular one:")
f = qmat([[2, 1], [0, 3]])
g = qmat([[1, 1], [0, 1]])
print("  verify:", verify_expend5(f, g))
