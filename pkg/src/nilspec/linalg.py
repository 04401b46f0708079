"""Exact dense linear algebra over the rationals.

Matrices are numpy arrays with ``dtype=object`` whose entries are
``fractions.Fraction``; all elimination is plain Gaussian elimination,
which is exact in that representation.  Bases of kernels and images are
returned in reduced column echelon form so results are deterministic
across runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .poly import Poly


def qmat(rows) -> np.ndarray:
    """Build an exact matrix from nested sequences of ints/Fractions/strings."""
    if isinstance(rows, np.ndarray) and rows.dtype == object:
        data = [[Fraction(x) for x in row] for row in rows]
    else:
        data = [[Fraction(x) for x in row] for row in rows]
    r = len(data)
    c = len(data[0]) if r else 0
    if any(len(row) != c for row in data):
        raise ValueError("ragged rows")
    m = np.empty((r, c), dtype=object)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            m[i, j] = x
    return m


def zeros(r: int, c: int) -> np.ndarray:
    m = np.empty((r, c), dtype=object)
    m[:] = Fraction(0)
    return m


def eye(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def is_integral(m: np.ndarray) -> bool:
    return all(Fraction(x).denominator == 1 for x in m.flat)


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def is_zero_matrix(m: np.ndarray) -> bool:
    return all(x == 0 for x in m.flat)


def rref(m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    a = m.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if a[i, c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        a[r] = a[r] * (1 / a[r, c])
        for i in range(rows):
            if i != r and a[i, c] != 0:
                a[i] = a[i] - a[i, c] * a[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


def column_echelon(m: np.ndarray) -> np.ndarray:
    """Reduced column echelon form with zero columns dropped."""
    r, pivots = rref(m.T)
    return r[: len(pivots)].T.copy()


def kernel_basis(m: np.ndarray) -> list[np.ndarray]:
    """Basis of the right null space, reduced column echelon, exact.

    Returns a list of column vectors (1-d object arrays); empty when the
    kernel is trivial.
    """
    rows, cols = m.shape
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return []
    basis = zeros(cols, len(free))
    for k, fc in enumerate(free):
        basis[fc, k] = Fraction(1)
        for i, pc in enumerate(pivots):
            basis[pc, k] = -r[i, fc]
    basis = column_echelon(basis)
    return [basis[:, j].copy() for j in range(basis.shape[1])]


def image_basis(m: np.ndarray) -> list[np.ndarray]:
    """Basis of the column space, reduced column echelon; size = rank."""
    b = column_echelon(m)
    return [b[:, j].copy() for j in range(b.shape[1])]


def solve(a: np.ndarray, b: np.ndarray):
    """One exact solution of a x = b, or None when inconsistent."""
    rows, cols = a.shape
    aug = zeros(rows, cols + 1)
    aug[:, :cols] = a
    aug[:, cols] = b
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = zeros(cols, 1)[:, 0]
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols]
    return x


def det(m: np.ndarray) -> Fraction:
    rows, cols = m.shape
    if rows != cols:
        raise ValueError("determinant of a non-square matrix")
    a = m.copy()
    d = Fraction(1)
    for c in range(cols):
        pivot_row = next((i for i in range(c, rows) if a[i, c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            a[[c, pivot_row]] = a[[pivot_row, c]]
            d = -d
        d *= a[c, c]
        inv = 1 / a[c, c]
        for i in range(c + 1, rows):
            if a[i, c] != 0:
                a[i] = a[i] - (a[i, c] * inv) * a[c]
    return d


def _hessenberg(m: np.ndarray) -> np.ndarray:
    """Similarity reduction to upper Hessenberg form, exact."""
    a = m.copy()
    n = a.shape[0]
    for c in range(n - 2):
        pivot = next((i for i in range(c + 1, n) if a[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != c + 1:
            a[[c + 1, pivot]] = a[[pivot, c + 1]]
            a[:, [c + 1, pivot]] = a[:, [pivot, c + 1]]
        inv = 1 / a[c + 1, c]
        for i in range(c + 2, n):
            if a[i, c] != 0:
                t = a[i, c] * inv
                a[i] = a[i] - t * a[c + 1]
                a[:, c + 1] = a[:, c + 1] + t * a[:, i]
    return a


def char_poly(m: np.ndarray) -> Poly:
    """det(xI - m), monic, via exact Hessenberg reduction.

    The Hessenberg leading-principal recurrence needs O(n^3) coefficient
    operations, which keeps dimensions in the dozens comfortable even
    with rational arithmetic.
    """
    rows, cols = m.shape
    if rows != cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = rows
    if n == 0:
        return Poly.one()
    h = _hessenberg(m)
    ps = [Poly.one()]
    for k in range(1, n + 1):
        pk = Poly((-h[k - 1, k - 1], 1)) * ps[k - 1]
        prod = Fraction(1)
        for i in range(k - 1, 0, -1):
            prod *= h[i, i - 1]
            if h[i - 1, k - 1] != 0 and prod != 0:
                pk = pk - (h[i - 1, k - 1] * prod) * ps[i - 1]
            if prod == 0:
                break
        ps.append(pk)
    return ps[n]


def companion(p: Poly) -> np.ndarray:
    """Companion matrix of a monic polynomial."""
    if not p.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    n = p.degree
    m = zeros(n, n)
    for i in range(1, n):
        m[i, i - 1] = Fraction(1)
    for i in range(n):
        m[i, n - 1] = -p.coeffs[i]
    return m


def intertwiner_space(f: np.ndarray, g: np.ndarray) -> list[np.ndarray]:
    """Basis of {h : h f = g h} with f n-by-n and g m-by-m.

    Vectorises h row-major and solves the (mn) x (mn) homogeneous system
    exactly; each returned matrix is m-by-n.  An empty list means only
    the zero map intertwines.
    """
    n, n2 = f.shape
    m, m2 = g.shape
    if n != n2 or m != m2:
        raise ValueError("intertwiner_space needs square matrices")
    sys = zeros(m * n, m * n)
    # Row (i, j) of the system is the (i, j) entry of h f - g h.
    for i in range(m):
        for j in range(n):
            row = i * n + j
            for k in range(n):
                sys[row, i * n + k] += f[k, j]
            for k in range(m):
                sys[row, k * n + j] -= g[i, k]
    basis = kernel_basis(sys)
    return [v.reshape(m, n) for v in basis]


class PreconditionError(ValueError):
    """An input violates a documented precondition."""


class NotExpandingInput(PreconditionError):
    pass


class NotUnimodularInput(PreconditionError):
    pass


class IntertwinerCheck:
    """Outcome of the expanding-vs-automorphism intertwiner test."""

    def __init__(self, confirmed_empty: bool, witness=None):
        self.confirmed_empty = confirmed_empty
        self.witness = witness

    def __repr__(self):
        if self.confirmed_empty:
            return "IntertwinerCheck(confirmed_empty=True)"
        return f"IntertwinerCheck(witness={self.witness!r})"


def verify_expend5(f: np.ndarray, g: np.ndarray) -> IntertwinerCheck:
    """Confirm that no nonzero h satisfies h f = g h.

    Preconditions: f is an expanding integer matrix and g is a unimodular
    integer matrix.  Under them the intertwiner space is guaranteed to be
    zero; a nonzero intertwiner is returned as a counterexample witness,
    which can only mean some precondition was violated upstream.
    """
    from .spectra import is_expanding_matrix  # deferred: avoids an import cycle

    if not is_integral(f) or not is_integral(g):
        raise PreconditionError("integer matrices required")
    if abs(det(g)) != 1:
        raise NotUnimodularInput("g is not unimodular (|det| != 1)")
    if not is_expanding_matrix(f).expanding:
        raise NotExpandingInput("f is not expanding")
    basis = intertwiner_space(f, g)
    if basis:
        return IntertwinerCheck(False, witness=basis[0])
    return IntertwinerCheck(True)
