"""Lie algebra cohomology from structure constants.

A finite-dimensional rational Lie algebra is given by its structure
constants on a basis; the associated exterior-algebra complex has the
differential determined on generators by the bracket and extended as a
degree +1 antiderivation with the Koszul sign,

    delta(a ^ b) = delta(a) ^ b + (-1)^|a| a ^ delta(b).

The Jacobi identity is exactly the condition that this differential
squares to zero, and the construction validates it rather than trusting
the input.  Automorphisms are pushed through functorially (transpose on
generators, compound matrices in higher degrees) and their effect on
cohomology is certified degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .complexes import (
    ChainEndomorphism,
    ChainExpansionReport,
    CochainComplex,
    chain_exp_check,
    cohomology,
)
from .linalg import char_poly, qmat, rank, zeros
from .multilinear import ExteriorBasis, dual_map, exterior_power, wedge_index_sign
from .poly import Poly
from .spectra import ExpansionVerdict, is_expanding_matrix


class JacobiViolation(ValueError):
    """The structure constants do not satisfy the Jacobi identity.

    ``triple`` is the 1-based basis triple (i, j, k) indexing the
    degree-3 monomial where the squared differential fails, ``generator``
    the 1-based dual generator it fails on, and ``value`` the offending
    coefficient.
    """

    def __init__(self, triple, generator, value):
        self.triple = triple
        self.generator = generator
        self.value = value
        i, j, k = triple
        super().__init__(
            f"Jacobi identity fails: delta^2 x_{generator} has coefficient "
            f"{value} on x_{i}^x_{j}^x_{k}")


class NotInvertible(ValueError):
    pass


class NotBracketPreserving(ValueError):
    """Witness of the first basis pair where the bracket is not preserved."""

    def __init__(self, i, j, residual):
        self.i = i
        self.j = j
        self.residual = residual
        super().__init__(
            f"[a X_{i}, a X_{j}] - a [X_{i}, X_{j}] = {list(residual)} != 0")


class LieAlgebra:
    """Structure constants of a rational Lie algebra.

    ``brackets`` maps 0-based pairs (i, j) with i < j to the coefficient
    vector of [X_i, X_j]; omitted pairs bracket to zero.  Antisymmetry is
    built in; the Jacobi identity is checked when the complex is built.
    """

    def __init__(self, dim: int, brackets: dict | None = None, name: str = ""):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        self.dim = dim
        self.name = name
        self.brackets: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        for (i, j), vec in (brackets or {}).items():
            if not 0 <= i < j < dim:
                raise ValueError(f"bracket pair ({i}, {j}) needs 0 <= i < j < {dim}")
            v = tuple(Fraction(x) for x in vec)
            if len(v) != dim:
                raise ValueError("bracket vector has wrong length")
            if any(v):
                self.brackets[(i, j)] = v

    @staticmethod
    def abelian(n: int, name: str = "") -> "LieAlgebra":
        return LieAlgebra(n, {}, name or f"abelian_{n}")

    def bracket_basis(self, i: int, j: int) -> np.ndarray:
        out = zeros(self.dim, 1)[:, 0]
        if i == j:
            return out
        key, sign = ((i, j), 1) if i < j else ((j, i), -1)
        vec = self.brackets.get(key)
        if vec:
            for k, c in enumerate(vec):
                out[k] = sign * c
        return out

    def bracket(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = zeros(self.dim, 1)[:, 0]
        for (i, j), vec in self.brackets.items():
            coeff = u[i] * v[j] - u[j] * v[i]
            if coeff:
                for k, c in enumerate(vec):
                    if c:
                        out[k] += coeff * c
        return out

    def jacobi_defects(self) -> list[tuple[tuple[int, int, int], np.ndarray]]:
        """Direct evaluation of the Jacobi identity on all basis triples.

        Returns the 1-based triples with a nonzero cyclic sum; the list
        is empty exactly when the identity holds.  Independent of the
        differential construction, so the two can cross-check each other.
        """
        basis = []
        for i in range(self.dim):
            e = zeros(self.dim, 1)[:, 0]
            e[i] = Fraction(1)
            basis.append(e)
        defects = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    s = (self.bracket(self.bracket(basis[i], basis[j]), basis[k])
                         + self.bracket(self.bracket(basis[j], basis[k]), basis[i])
                         + self.bracket(self.bracket(basis[k], basis[i]), basis[j]))
                    if any(s):
                        defects.append(((i + 1, j + 1, k + 1), s))
        return defects


def ce_differentials(g: LieAlgebra) -> list[np.ndarray]:
    """The exterior-algebra differentials of g, one per degree."""
    n = g.dim
    diffs = [zeros(n, 1)]
    gen_terms: list[list[tuple[tuple[int, int], Fraction]]] = [[] for _ in range(n)]
    for (i, j), vec in g.brackets.items():
        for k, c in enumerate(vec):
            if c:
                gen_terms[k].append(((i, j), -c))
    for l in range(1, n):
        src = ExteriorBasis(n, l)
        dst = ExteriorBasis(n, l + 1)
        d = zeros(dst.dim, src.dim)
        for col, tup in enumerate(src.tuples):
            for pos in range(l):
                outer_sign = -1 if pos % 2 else 1
                rest = tup[:pos] + tup[pos + 1:]
                for (i, j), coeff in gen_terms[tup[pos]]:
                    merged, sign = wedge_index_sign((i, j) + rest)
                    if sign:
                        d[dst.index(merged), col] += outer_sign * sign * coeff
        diffs.append(d)
    return diffs


def ce_complex(g: LieAlgebra) -> CochainComplex:
    """The cochain complex of g; raises JacobiViolation when delta^2 != 0."""
    n = g.dim
    diffs = ce_differentials(g)
    if n >= 3:
        sq = diffs[2] @ diffs[1]
        basis3 = ExteriorBasis(n, 3).tuples
        for col in range(n):
            for row in range(sq.shape[0]):
                if sq[row, col] != 0:
                    a, b, c = basis3[row]
                    raise JacobiViolation((a + 1, b + 1, c + 1), col + 1,
                                          sq[row, col])
    dims = [comb(n, l) for l in range(n + 1)]
    return CochainComplex(dims, diffs)


def betti(g: LieAlgebra) -> list[int]:
    """Cohomology dimensions of the exterior-algebra complex of g."""
    return [sp.dim for sp in cohomology(ce_complex(g))]


@dataclass(frozen=True)
class LieAutomorphism:
    """A validated bracket-preserving invertible linear map."""

    algebra: LieAlgebra
    matrix: np.ndarray


def check_automorphism(g: LieAlgebra, a) -> LieAutomorphism:
    """Validate invertibility and bracket preservation of a, exactly."""
    m = qmat(a) if not isinstance(a, np.ndarray) else a
    if m.shape != (g.dim, g.dim):
        raise ValueError(f"matrix must be {g.dim}x{g.dim}")
    if rank(m) != g.dim:
        raise NotInvertible("matrix is singular")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = g.bracket(m[:, i], m[:, j])
            rhs = m @ g.bracket_basis(i, j)
            diff = lhs - rhs
            if any(diff):
                raise NotBracketPreserving(i + 1, j + 1, diff)
    return LieAutomorphism(g, m)


def induced_ce_endomorphism(aut: LieAutomorphism) -> ChainEndomorphism:
    """The pullback of aut on the exterior complex: the transpose in
    degree 1, its compound matrices above.  Commutation with the
    differential is re-verified exactly; failure means a bug here."""
    g = aut.algebra
    t = dual_map(aut.matrix)
    maps = [exterior_power(t, l) for l in range(g.dim + 1)]
    return ChainEndomorphism(ce_complex(g), maps)


class ExpansionContradictionError(RuntimeError):
    """An expanding automorphism produced a non-expanding map on some
    positive-degree cohomology.  That combination is mathematically
    impossible, so reaching this error means the library itself is
    wrong; it must never be swallowed."""

    def __init__(self, certificate):
        self.certificate = certificate
        bad = [e.degree for e in certificate.degrees
               if e.degree > 0 and not e.verdict.expanding]
        super().__init__(
            f"expanding automorphism yielded non-expanding cohomology maps "
            f"in degrees {bad}")


@dataclass(frozen=True)
class DegreeCertificate:
    degree: int
    dim: int
    matrix: np.ndarray
    char_poly: Poly
    verdict: ExpansionVerdict


@dataclass(frozen=True)
class ExpansionCertificate:
    """Per-degree record of the induced cohomology maps of an
    automorphism: matrix, characteristic polynomial, verdict."""

    algebra_name: str
    base_verdict: ExpansionVerdict
    degrees: tuple[DegreeCertificate, ...]

    def all_positive_expanding(self) -> bool:
        return all(e.verdict.expanding for e in self.degrees if e.degree > 0)


def certify_expanding_on_cohomology(aut: LieAutomorphism) -> ExpansionCertificate:
    """Certify the induced cohomology maps of a validated automorphism.

    When the automorphism itself is expanding, every positive degree
    must come out expanding; a failure raises ExpansionContradictionError
    carrying the full certificate instead of returning it.
    """
    endo = induced_ce_endomorphism(aut)
    report: ChainExpansionReport = chain_exp_check(endo)
    base = is_expanding_matrix(aut.matrix)
    degrees = tuple(
        DegreeCertificate(
            degree=e.degree,
            dim=e.cohomology_dim,
            matrix=e.induced,
            char_poly=char_poly(e.induced),
            verdict=e.conclusion,
        )
        for e in report.degrees
    )
    cert = ExpansionCertificate(aut.algebra.name, base, degrees)
    if base.expanding and not cert.all_positive_expanding():
        raise ExpansionContradictionError(cert)
    return cert
