"""Lie algebra cohomology of the Heisenberg algebra, start to finish.

The 3-dimensional Heisenberg algebra has one nonzero bracket,
[X1, X2] = X3.  Its exterior-algebra complex is tiny enough to read off
by hand, which makes it a good first check of the machinery: the
differential kills x1 and x2 and sends x3 to -x1^x2, so the degree-1
cohomology is spanned by [x1], [x2] and the degree-2 cohomology by
[x1^x3], [x2^x3].
"""

from nilspec import (
    LieAlgebra,
    betti,
    ce_complex,
    certify_expanding_on_cohomology,
    check_automorphism,
    cohomology,
    qmat,
)
from nilspec.multilinear import ExteriorBasis

h3 = LieAlgebra(3, {(0, 1): [0, 0, 1]}, name="heisenberg")
cx = ce_complex(h3)

print("chain dimensions:", cx.dims)
print("betti numbers:   ", betti(h3))

print()
print("degree-2 cohomology basis (coordinates over the wedge basis "
      f"{ExteriorBasis(3, 2).tuples}):")
spaces = cohomology(cx)
for j in range(2):
    col = spaces[2].representatives[:, j]
    print("  class", j, "->", [str(x) for x in col])

print()
print("An automorphism has to respect the bracket.  Doubling X1 and X2")
print("forces X3 to scale by 4:")
aut = check_automorphism(h3, qmat([[2, 0, 0], [0, 2, 0], [0, 0, 4]]))
cert = certify_expanding_on_cohomology(aut)
for entry in cert.degrees:
    if entry.degree == 0:
        continue
    print(f"  degree {entry.degree}: char poly {entry.char_poly}, "
          f"{entry.verdict.verdict}")

print()
print("The same automorphism scaled down ([X1,X2] -> 2 X3 only) is refused:")
try:
    check_automorphism(h3, qmat([[2, 0, 0], [0, 2, 0], [0, 0, 2]]))
except Exception as exc:
    print("  ", exc)

print()
print("Bad structure constants are refused as well, with the violating")
print("triple located (the squared differential must vanish):")
broken = LieAlgebra(4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1],
                        (1, 2): [0, 0, 0, 1], (0, 3): [0, 0, 0, 1]})
try:
    ce_complex(broken)
except Exception as exc:
    print("  ", exc)
