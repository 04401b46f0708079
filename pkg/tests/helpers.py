"""Shared randomized generators for the test suite.

Everything takes an explicit ``random.Random`` so failures reproduce.
Expanding integer matrices are built from ingredients that are expanding
by construction (integer roots of modulus at least 2, conjugation by
unimodular matrices), which gives the property suites an oracle
independent of the code under test.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from nilspec import Poly, companion, eye, qmat
from nilspec.linalg import zeros
from nilspec.snf import random_unimodular


def rand_fraction(rng: random.Random, span: int = 5) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def rand_matrix(rng: random.Random, rows: int, cols: int, span: int = 5) -> np.ndarray:
    if rows == 0 or cols == 0:
        return zeros(rows, cols)
    return qmat([[rand_fraction(rng, span) for _ in range(cols)]
                 for _ in range(rows)])


def rand_int_matrix(rng: random.Random, rows: int, cols: int, span: int = 6) -> np.ndarray:
    if rows == 0 or cols == 0:
        return zeros(rows, cols)
    return qmat([[rng.randint(-span, span) for _ in range(cols)]
                 for _ in range(rows)])


def expanding_roots(rng: random.Random, n: int) -> list[int]:
    return [rng.choice([-5, -4, -3, -2, 2, 3, 4, 5]) for _ in range(n)]


def expanding_int_matrix(rng: random.Random, n: int) -> np.ndarray:
    """An integer matrix that is expanding by construction: the companion
    of a polynomial with integer roots of modulus >= 2, conjugated by a
    unimodular matrix to hide the structure."""
    p = Poly.from_roots(expanding_roots(rng, n))
    c = companion(p)
    u = qmat(random_unimodular(n, rng, steps=6))
    return u @ c @ _unimodular_inverse(u)


def _unimodular_inverse(u: np.ndarray) -> np.ndarray:
    n = u.shape[0]
    aug = zeros(n, 2 * n)
    aug[:, :n] = u
    aug[:, n:] = eye(n)
    from nilspec.linalg import rref

    r, pivots = rref(aug)
    assert pivots == list(range(n))
    return r[:, n:].copy()


def conjugate(m: np.ndarray, rng: random.Random) -> np.ndarray:
    u = qmat(random_unimodular(m.shape[0], rng, steps=6))
    return u @ m @ _unimodular_inverse(u)


def random_complex_with_endo(rng: random.Random, expanding_only: bool = True,
                             max_len: int = 3, max_pieces: int = 2):
    """A cochain complex with a commuting endomorphism and known answers.

    Built as a direct sum of zero-differential summands (one cohomology
    dimension each, scaled by a known eigenvalue) and two-term acyclic
    summands (identity differential, equal scalar on both ends), then
    conjugated degree-wise by unimodular matrices.  Returns the complex,
    the endomorphism, the cohomology dimensions, and the per-degree
    multiset of eigenvalues acting on cohomology.
    """
    from nilspec import CochainComplex, ChainEndomorphism

    top = rng.randint(1, max_len)
    scalars = [2, 3, -2, -3] if expanding_only else [2, 3, -2, 1, -1, 0]
    h_counts = [rng.randint(0, max_pieces) for _ in range(top + 1)]
    h_eigs = [[rng.choice(scalars) for _ in range(h)] for h in h_counts]
    acyclic = [rng.randint(0, max_pieces) for _ in range(top)]
    acyclic_eigs = [[rng.choice([s for s in scalars if s != 0]) for _ in range(a)]
                    for a in acyclic]

    dims = []
    for i in range(top + 1):
        below = acyclic[i - 1] if i > 0 else 0
        above = acyclic[i] if i < top else 0
        dims.append(h_counts[i] + below + above)
    # Coordinate layout per degree: [h block | from-below block | to-above block]
    diffs = []
    for i in range(top):
        d = zeros(dims[i + 1], dims[i])
        src_off = h_counts[i] + (acyclic[i - 1] if i > 0 else 0)
        dst_off = h_counts[i + 1]
        for k in range(acyclic[i]):
            d[dst_off + k, src_off + k] = Fraction(1)
        diffs.append(d)
    maps = []
    for i in range(top + 1):
        f = zeros(dims[i], dims[i])
        pos = 0
        for lam in h_eigs[i]:
            f[pos, pos] = Fraction(lam)
            pos += 1
        if i > 0:
            for lam in acyclic_eigs[i - 1]:
                f[pos, pos] = Fraction(lam)
                pos += 1
        if i < top:
            for lam in acyclic_eigs[i]:
                f[pos, pos] = Fraction(lam)
                pos += 1
        maps.append(f)
    # Hide the structure by a degree-wise change of basis.
    ps = [qmat(random_unimodular(dims[i], rng, steps=5)) if dims[i] else eye(0)
          for i in range(top + 1)]
    pinvs = [_unimodular_inverse(p) if p.shape[0] else p for p in ps]
    diffs = [ps[i + 1] @ diffs[i] @ pinvs[i] for i in range(top)]
    maps = [ps[i] @ maps[i] @ pinvs[i] for i in range(top + 1)]
    cx = CochainComplex(dims, diffs)
    endo = ChainEndomorphism(cx, maps)
    return cx, endo, h_counts, h_eigs


def random_exact_triple(rng: random.Random, max_dim: int = 3):
    """An exact triple built by choosing the pair map first and then a
    difference map whose kernel is exactly its image."""
    from nilspec import ExactTriple, kernel_basis

    a = rng.randint(0, max_dim)
    b1 = rng.randint(0, max_dim)
    b2 = rng.randint(0, max_dim)
    i1 = rand_matrix(rng, b1, a, span=3)
    i2 = rand_matrix(rng, b2, a, span=3)
    phi = zeros(b1 + b2, a)
    phi[:b1] = i1
    phi[b1:] = i2
    # Rows annihilating the image span exactly the right kernel.
    left_null = kernel_basis(phi.T.copy())
    c = len(left_null)
    psi = zeros(c, b1 + b2)
    for r, v in enumerate(left_null):
        psi[r] = v
    j1 = psi[:, :b1].copy()
    j2 = (-psi[:, b1:]).copy()
    return ExactTriple(i1, i2, j1, j2)
