"""Exact-arithmetic toolkit: Lie algebra cohomology over the rationals,
expansion certificates for polynomials and matrices, and Betti-number
obstruction checks for solenoid attractor pairs."""

from .complexes import (
    ChainEndomorphism,
    CochainComplex,
    CohomologySpace,
    ExactTriple,
    chain_exp_check,
    cohomology,
    exact_triple_analyze,
    induced_on_cohomology,
)
from .lie import (
    ExpansionCertificate,
    ExpansionContradictionError,
    JacobiViolation,
    LieAlgebra,
    LieAutomorphism,
    NotBracketPreserving,
    NotInvertible,
    betti,
    ce_complex,
    certify_expanding_on_cohomology,
    check_automorphism,
    induced_ce_endomorphism,
)
from .linalg import (
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
from .multilinear import (
    ExteriorBasis,
    char_poly_exterior_check,
    dual_map,
    exterior_power,
    kronecker,
)
from .obstruction import (
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
from .poly import Poly, SturmChain, count_real_roots, isolate_real_root, poly_gcd
from .snf import is_unimodular, smith_normal_form
from .spectra import (
    ExpansionVerdict,
    eigen_product_multiset,
    is_expanding_matrix,
    is_expanding_poly,
)

__version__ = "0.1.0"
