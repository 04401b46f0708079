"""Bounded cochain complexes of rational vector spaces.

Cohomology comes with explicit, deterministically chosen bases: kernel
and image bases are reduced column echelon forms, and representatives
are the kernel columns that survive a greedy extension of the image
basis.  That makes induced matrices reproducible across runs, which the
golden-file tests rely on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .linalg import (
    image_basis,
    is_zero_matrix,
    kernel_basis,
    qmat,
    rank,
    rref,
    solve,
    zeros,
)
from .spectra import ExpansionVerdict, is_expanding_matrix


def _as_mat(m) -> np.ndarray:
    return m if isinstance(m, np.ndarray) and m.dtype == object else qmat(m)


def _hstack(cols: list[np.ndarray], rows: int) -> np.ndarray:
    out = zeros(rows, len(cols))
    for j, v in enumerate(cols):
        out[:, j] = v
    return out


class CochainComplex:
    """Degrees 0..top with differentials d_i : C_i -> C_{i+1}.

    ``differentials[i]`` has shape (dims[i+1], dims[i]); the composite
    d_{i+1} d_i must vanish exactly or construction fails.
    """

    def __init__(self, dims: list[int], differentials: list[np.ndarray]):
        self.dims = list(dims)
        self.top = len(dims) - 1
        if len(differentials) != self.top:
            raise ValueError("need one differential per adjacent pair of degrees")
        self.differentials = [_as_mat(d) for d in differentials]
        for i, d in enumerate(self.differentials):
            if d.shape != (dims[i + 1], dims[i]):
                raise ValueError(f"differential {i} has shape {d.shape}, "
                                 f"expected {(dims[i + 1], dims[i])}")
        for i in range(self.top - 1):
            comp = self.differentials[i + 1] @ self.differentials[i]
            if not is_zero_matrix(comp):
                raise ValueError(f"d_{i + 1} d_{i} != 0: not a complex")

    def d_out(self, i: int) -> np.ndarray:
        """The differential leaving degree i (a zero map at the top)."""
        if i < self.top:
            return self.differentials[i]
        return zeros(0, self.dims[i])

    def d_in(self, i: int) -> np.ndarray:
        """The differential arriving at degree i (a zero map at 0)."""
        if i > 0:
            return self.differentials[i - 1]
        return zeros(self.dims[i], 0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dims))


@dataclass
class CohomologySpace:
    """Cohomology of one degree with a chosen basis.

    ``representatives`` columns are cocycles spanning a complement of
    the coboundaries inside the cocycles; ``project`` maps any cocycle
    to its coordinates in that basis.
    """

    degree: int
    dim: int
    representatives: np.ndarray
    _span: np.ndarray = field(repr=False)

    def project(self, vec: np.ndarray) -> np.ndarray:
        x = solve(self._span, vec)
        if x is None:
            raise ValueError("vector is not a cocycle of this degree")
        return x[self._span.shape[1] - self.dim:]


def cohomology(cx: CochainComplex) -> list[CohomologySpace]:
    """Cohomology in every degree, with deterministic bases."""
    out = []
    for i in range(cx.top + 1):
        n = cx.dims[i]
        kern = kernel_basis(cx.d_out(i))
        bnd = image_basis(cx.d_in(i))
        span = _hstack(bnd, n)
        reps: list[np.ndarray] = []
        r = rank(span)
        for v in kern:
            cand = _hstack(bnd + reps + [v], n)
            r2 = rank(cand)
            if r2 > r + len(reps):
                reps.append(v)
        out.append(CohomologySpace(
            degree=i,
            dim=len(reps),
            representatives=_hstack(reps, n),
            _span=_hstack(bnd + reps, n),
        ))
    return out


class ChainEndomorphism:
    """A degree-preserving endomorphism commuting with the differential."""

    def __init__(self, cx: CochainComplex, maps: list[np.ndarray]):
        self.complex = cx
        if len(maps) != cx.top + 1:
            raise ValueError("need one map per degree")
        self.maps = [_as_mat(f) for f in maps]
        for i, f in enumerate(self.maps):
            if f.shape != (cx.dims[i], cx.dims[i]):
                raise ValueError(f"map in degree {i} is not square of dim {cx.dims[i]}")
        for i in range(cx.top):
            lhs = cx.differentials[i] @ self.maps[i]
            rhs = self.maps[i + 1] @ cx.differentials[i]
            if not (lhs.shape == rhs.shape and all(
                    x == y for x, y in zip(lhs.flat, rhs.flat))):
                raise ValueError(f"map does not commute with d in degree {i}")


def induced_on_cohomology(endo: ChainEndomorphism,
                          spaces: list[CohomologySpace] | None = None
                          ) -> list[np.ndarray]:
    """Matrix of the induced map on cohomology in each degree."""
    cx = endo.complex
    spaces = cohomology(cx) if spaces is None else spaces
    out = []
    for i, sp in enumerate(spaces):
        h = sp.dim
        mat = zeros(h, h)
        if h:
            pushed = endo.maps[i] @ sp.representatives
            for j in range(h):
                mat[:, j] = sp.project(pushed[:, j])
        out.append(mat)
    return out


@dataclass(frozen=True)
class DegreeExpansion:
    degree: int
    chain_dim: int
    cohomology_dim: int
    hypothesis: ExpansionVerdict
    induced: np.ndarray
    conclusion: ExpansionVerdict


@dataclass(frozen=True)
class ChainExpansionReport:
    """Per-degree expansion of the chain maps and the induced maps.

    Positive degrees are what the expansion statements quantify over;
    degree 0 is reported but not counted.
    """

    degrees: tuple[DegreeExpansion, ...]

    def hypothesis_holds(self) -> bool:
        return all(e.hypothesis.expanding for e in self.degrees if e.degree > 0)

    def conclusion_holds(self) -> bool:
        return all(e.conclusion.expanding for e in self.degrees if e.degree > 0)


def chain_exp_check(endo: ChainEndomorphism) -> ChainExpansionReport:
    """Check expansion of every chain map and of every induced map."""
    spaces = cohomology(endo.complex)
    induced = induced_on_cohomology(endo, spaces)
    entries = []
    for i, sp in enumerate(spaces):
        entries.append(DegreeExpansion(
            degree=i,
            chain_dim=endo.complex.dims[i],
            cohomology_dim=sp.dim,
            hypothesis=is_expanding_matrix(endo.maps[i]),
            induced=induced[i],
            conclusion=is_expanding_matrix(induced[i]),
        ))
    return ChainExpansionReport(tuple(entries))


# -- exact triples ----------------------------------------------------


class ExactTriple:
    """Matrices realizing A -> B1 (+) B2 -> C, exact at the middle.

    The first map is (i1, i2) stacked, the second is j1 - j2; exactness
    (kernel of the difference map equals the image of the pair map) is
    verified by an exact rank computation at construction.
    """

    def __init__(self, i1, i2, j1, j2):
        self.i1, self.i2 = _as_mat(i1), _as_mat(i2)
        self.j1, self.j2 = _as_mat(j1), _as_mat(j2)
        a = self.i1.shape[1]
        if self.i2.shape[1] != a:
            raise ValueError("i1 and i2 must share a domain")
        if self.j1.shape[1] != self.i1.shape[0]:
            raise ValueError("j1 domain must match i1 codomain")
        if self.j2.shape[1] != self.i2.shape[0]:
            raise ValueError("j2 domain must match i2 codomain")
        if self.j1.shape[0] != self.j2.shape[0]:
            raise ValueError("j1 and j2 must share a codomain")
        b1, b2 = self.i1.shape[0], self.i2.shape[0]
        self.phi = zeros(b1 + b2, a)
        self.phi[:b1] = self.i1
        self.phi[b1:] = self.i2
        self.psi = zeros(self.j1.shape[0], b1 + b2)
        self.psi[:, :b1] = self.j1
        self.psi[:, b1:] = -self.j2
        if not is_zero_matrix(self.psi @ self.phi):
            raise ValueError("not exact: the composite is nonzero")
        r_phi, r_psi = rank(self.phi), rank(self.psi)
        if r_phi != b1 + b2 - r_psi:
            raise ValueError(
                f"not exact: rank(pair map) = {r_phi} but the difference "
                f"map has nullity {b1 + b2 - r_psi}")


@dataclass(frozen=True)
class TripleReport:
    ranks: dict
    injective: dict
    surjective: dict
    violations: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations


def exact_triple_analyze(t: ExactTriple) -> TripleReport:
    """Exact injectivity/surjectivity flags and the implication audit."""
    mats = {"i1": t.i1, "i2": t.i2, "j1": t.j1, "j2": t.j2,
            "phi": t.phi, "psi": t.psi}
    ranks = {k: rank(m) for k, m in mats.items()}
    inj = {k: ranks[k] == m.shape[1] for k, m in mats.items()}
    sur = {k: ranks[k] == m.shape[0] for k, m in mats.items()}
    rules = [
        ("a: i1 injective => j2 injective", not inj["i1"] or inj["j2"]),
        ("b: j2 injective and pair map injective => i1 injective",
         not (inj["j2"] and inj["phi"]) or inj["i1"]),
        ("c: i1 surjective and difference map surjective => j2 surjective",
         not (sur["i1"] and sur["psi"]) or sur["j2"]),
        ("d: j2 surjective => i1 surjective", not sur["j2"] or sur["i1"]),
        ("e.a: i2 injective => j1 injective", not inj["i2"] or inj["j1"]),
        ("e.b: j1 injective and pair map injective => i2 injective",
         not (inj["j1"] and inj["phi"]) or inj["i2"]),
        ("e.c: i2 surjective and difference map surjective => j1 surjective",
         not (sur["i2"] and sur["psi"]) or sur["j1"]),
        ("e.d: j1 surjective => i2 surjective", not sur["j1"] or sur["i2"]),
    ]
    violations = tuple(
        f"{name} (ranks: {ranks})" for name, ok in rules if not ok)
    return TripleReport(ranks=ranks, injective=inj, surjective=sur,
                        violations=violations)
