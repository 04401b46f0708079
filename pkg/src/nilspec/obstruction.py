"""Betti-number bookkeeping for solenoid attractor pairs.

No manifolds appear here: the inputs are Betti vectors of the two base
manifolds of a hypothetical attractor/repeller pair filling a closed
oriented n-manifold, and the operations replay the dimension arguments
that such a pair forces.  An oriented disk bundle admitting an expanding
lift has zero Euler class, so the boundary Betti numbers split as

    b_l(boundary) = b_l(base) + b_{l-q+1}(base),

and surjectivity of the gluing map from the middle region pins the
Betti vectors down until either an inequality fails (no such pair) or
everything collapses to the rational homology sphere pattern.
"""

from __future__ import annotations

from dataclasses import dataclass


class BettiVector:
    """Betti numbers b_0..b_p of a closed oriented p-manifold-like input.

    Enforces b_0 = b_p = 1 and the duality b_i = b_{p-i}; inputs that
    fail are rejected outright rather than repaired.
    """

    def __init__(self, values):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("empty Betti vector")
        if any(v < 0 for v in vals):
            raise ValueError("Betti numbers must be non-negative")
        if vals[0] != 1 or vals[-1] != 1:
            raise ValueError("a closed connected oriented input needs b_0 = b_top = 1")
        p = len(vals) - 1
        for i in range(p + 1):
            if vals[i] != vals[p - i]:
                raise ValueError(
                    f"duality violated: b_{i} = {vals[i]} but b_{p - i} = {vals[p - i]}")
        self.values = vals

    @property
    def top_dim(self) -> int:
        return len(self.values) - 1

    def get(self, i: int) -> int:
        """b_i, with out-of-range degrees contributing 0."""
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        vals = other.values if isinstance(other, BettiVector) else tuple(other)
        return self.values == vals

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"BettiVector({list(self.values)})"

    @staticmethod
    def ones(length: int) -> "BettiVector":
        return BettiVector((1,) * length)

    @staticmethod
    def torus(p: int) -> "BettiVector":
        from math import comb
        return BettiVector(tuple(comb(p, i) for i in range(p + 1)))

    @staticmethod
    def sphere(n: int) -> "BettiVector":
        if n < 1:
            raise ValueError("sphere dimension must be positive")
        return BettiVector((1,) + (0,) * (n - 1) + (1,))


def gysin_boundary_betti(beta: BettiVector, q: int) -> BettiVector:
    """Betti vector of the boundary sphere bundle of a q-disk bundle
    with zero Euler class over a base with Betti vector beta."""
    if q < 2:
        raise ValueError("fiber disk dimension must be at least 2")
    p = beta.top_dim
    return BettiVector(tuple(
        beta.get(l) + beta.get(l - q + 1) for l in range(p + q)))


@dataclass(frozen=True)
class AttractorPairSpec:
    """Ambient dimension, the two (base, fiber) type pairs, and the two
    base Betti vectors."""

    n: int
    q1: int
    q2: int
    betti1: BettiVector
    betti2: BettiVector

    def __post_init__(self):
        for q, b, tag in ((self.q1, self.betti1, 1), (self.q2, self.betti2, 2)):
            p = self.n - q
            if q < 2:
                raise ValueError(f"q{tag} = {q}: fiber dimension below 2 cannot occur")
            if p < 1:
                raise ValueError(f"base {tag} would have dimension {p} < 1")
            if b.top_dim != p:
                raise ValueError(
                    f"Betti vector {tag} has top dimension {b.top_dim}, "
                    f"expected {p} = n - q{tag}")

    @property
    def p1(self) -> int:
        return self.n - self.q1

    @property
    def p2(self) -> int:
        return self.n - self.q2


@dataclass(frozen=True)
class GapReport:
    """Dimension audit of the gluing map in one degree.

    ``source_dim`` is the middle-region homology dimension, computed on
    the second boundary; ``forced_kernel`` is the subspace of classes
    swept out by fiber spheres, which dies in both sides when the fiber
    sphere has dimension at least 2 (q2 >= 3); ``required`` is what
    surjectivity onto both sides needs.
    """

    degree: int
    q2: int
    source_dim: int
    forced_kernel: int
    image_bound: int
    required: int

    @property
    def kernel_applicable(self) -> bool:
        return self.q2 >= 3

    @property
    def impossible(self) -> bool:
        return self.image_bound < self.required


def mv_surjectivity_gap(spec: AttractorPairSpec, l: int) -> GapReport:
    """Can the degree-l gluing map be surjective?  Pure dimension count."""
    boundary2 = gysin_boundary_betti(spec.betti2, spec.q2)
    source = boundary2.get(l)
    kernel = spec.betti2.get(l - spec.q2 + 1) if spec.q2 >= 3 else 0
    required = spec.betti1.get(l) + spec.betti2.get(l)
    return GapReport(
        degree=l,
        q2=spec.q2,
        source_dim=source,
        forced_kernel=kernel,
        image_bound=source - kernel,
        required=required,
    )


@dataclass(frozen=True)
class Case1Contradiction:
    """Surjectivity is dimensionally impossible in the witness degree."""

    degree: int
    image_bound: int
    required: int
    witnesses: tuple[int, ...]

    tag = "Case1Contradiction"

    def machine(self) -> str:
        return (f"verdict={self.tag} degree={self.degree} "
                f"image_bound={self.image_bound} required={self.required} "
                f"witnesses={','.join(map(str, self.witnesses))}")


@dataclass(frozen=True)
class SphereForced:
    """Both bases have all Betti numbers 1 and the ambient manifold has
    the rational homology of a sphere."""

    manifold_betti: BettiVector
    chain: tuple[tuple[str, int], ...]

    tag = "SphereForced"

    def machine(self) -> str:
        return (f"verdict={self.tag} "
                f"manifold_betti={','.join(map(str, self.manifold_betti))}")


@dataclass(frozen=True)
class InputInconsistent:
    """The supplied Betti data cannot belong to such an attractor pair."""

    reason: str
    degree: int | None = None

    tag = "InputInconsistent"

    def machine(self) -> str:
        deg = "-" if self.degree is None else str(self.degree)
        return f"verdict={self.tag} degree={deg} reason={self.reason.replace(' ', '_')}"


ObstructionVerdict = Case1Contradiction | SphereForced | InputInconsistent


def sphere_theorem_check(spec: AttractorPairSpec) -> ObstructionVerdict:
    """Replay the obstruction argument on the supplied Betti data.

    With a fiber dimension of 3 or more the fiber-sphere kernel makes
    the gluing map non-surjective in degree p1 outright.  With both
    fibers of dimension 2 the boundary Betti vectors must agree and the
    alternating inequality chain must hold; it then collapses to all
    ones and forces the rational homology sphere pattern.
    """
    # Order the pair so q1 <= q2, mirroring the argument's symmetry.
    if spec.q1 > spec.q2:
        spec = AttractorPairSpec(spec.n, spec.q2, spec.q1,
                                 spec.betti2, spec.betti1)

    if spec.q2 >= 3:
        witnesses = tuple(
            l for l in range(1, spec.n)
            if mv_surjectivity_gap(spec, l).impossible)
        report = mv_surjectivity_gap(spec, spec.p1)
        if not report.impossible:  # pragma: no cover - b_{p1} = 1 forbids this
            raise AssertionError("top-degree gap must exist when q2 >= 3")
        return Case1Contradiction(
            degree=spec.p1,
            image_bound=report.image_bound,
            required=report.required,
            witnesses=witnesses,
        )

    # q1 = q2 = 2: the two boundary sphere bundles are homologous layer
    # by layer; enforce that before chaining inequalities.
    bd1 = gysin_boundary_betti(spec.betti1, 2)
    bd2 = gysin_boundary_betti(spec.betti2, 2)
    if bd1 != bd2:
        l = next(i for i in range(len(bd1)) if bd1[i] != bd2[i])
        return InputInconsistent(
            reason=(f"boundary Betti vectors differ in degree {l}: "
                    f"{bd1[l]} vs {bd2[l]}"),
            degree=l)

    chain: list[tuple[str, int]] = []
    for l in range(1, spec.n - 1):
        pairs = (
            (f"b_{l - 1}(X1) >= b_{l}(X2)",
             spec.betti1.get(l - 1), spec.betti2.get(l)),
            (f"b_{l - 1}(X2) >= b_{l}(X1)",
             spec.betti2.get(l - 1), spec.betti1.get(l)),
        )
        for label, lhs, rhs in pairs:
            chain.append((label, lhs - rhs))
            if lhs < rhs:
                return InputInconsistent(
                    reason=f"{label} fails: {lhs} < {rhs}", degree=l)

    # The chains run from b_0 = 1 down to b_{n-2} = 1, so every link is
    # an equality and all Betti numbers are 1.
    assert all(b == 1 for b in spec.betti1) and all(b == 1 for b in spec.betti2)
    return SphereForced(
        manifold_betti=BettiVector.sphere(spec.n),
        chain=tuple(chain),
    )


@dataclass(frozen=True)
class ToricReport:
    n: int
    middle_dim: int
    required: int

    @property
    def obstructed(self) -> bool:
        return self.middle_dim < self.required

    def machine(self) -> str:
        verdict = "impossible" if self.obstructed else "not_obstructed"
        return (f"verdict={verdict} n={self.n} middle_b1={self.middle_dim} "
                f"required={self.required}")

    def describe(self) -> str:
        rel = "<" if self.obstructed else ">="
        outcome = ("impossible: the gluing map cannot be surjective"
                   if self.obstructed else "not obstructed at this level")
        return (f"n={self.n}: first Betti number {self.middle_dim} of the "
                f"middle region {rel} {self.required} required, {outcome}")


def toric_corollary_check(n: int) -> ToricReport:
    """First-Betti-number count for a pair of torus-based type
    (n-2, 2) attractors in an n-manifold."""
    if n < 3:
        raise ValueError("ambient dimension must be at least 3")
    torus = BettiVector.torus(n - 2)
    middle = gysin_boundary_betti(torus, 2).get(1)
    required = 2 * torus.get(1)
    assert middle == n - 1 and required == 2 * n - 4
    return ToricReport(n=n, middle_dim=middle, required=required)
