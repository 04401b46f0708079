"""Smith normal form of integer matrices by gcd-driven elimination.

Row and column operations are accumulated into unimodular transforms so
``left @ m @ right`` reproduces the diagonal exactly.  Pivots are chosen
by minimal absolute value, which keeps intermediate entries small at the
dense sizes this package works with.
"""

from __future__ import annotations

import numpy as np

from .linalg import det, is_integral, qmat


def _as_int_matrix(m) -> np.ndarray:
    a = qmat(m)
    if not is_integral(a):
        raise ValueError("integer matrix required")
    out = np.empty(a.shape, dtype=object)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            out[i, j] = int(a[i, j])
    return out


def _int_eye(n: int) -> np.ndarray:
    m = np.empty((n, n), dtype=object)
    m[:] = 0
    for i in range(n):
        m[i, i] = 1
    return m


def smith_normal_form(m) -> tuple[list[int], np.ndarray, np.ndarray]:
    """Return (diagonal, left, right) with left @ m @ right diagonal.

    The diagonal has length min(rows, cols), entries are non-negative,
    each divides the next (zeros trail), and both transforms have
    determinant +-1.
    """
    a = _as_int_matrix(m)
    rows, cols = a.shape
    left = _int_eye(rows)
    right = _int_eye(cols)

    def pivot_search(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i, j]
                if v != 0 and (best is None or abs(v) < abs(a[best[0], best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        pos = pivot_search(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            a[[t, i]] = a[[i, t]]
            left[[t, i]] = left[[i, t]]
        if j != t:
            a[:, [t, j]] = a[:, [j, t]]
            right[:, [t, j]] = right[:, [j, t]]
        # Clear row and column t; a failed exact division re-enters the
        # loop with the (smaller) remainder as the new pivot candidate.
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if a[i, t] != 0:
                    q = a[i, t] // a[t, t]
                    if q:
                        a[i] = a[i] - q * a[t]
                        left[i] = left[i] - q * left[t]
                    if a[i, t] != 0:
                        a[[t, i]] = a[[i, t]]
                        left[[t, i]] = left[[i, t]]
                        dirty = True
            for j in range(t + 1, cols):
                if a[t, j] != 0:
                    q = a[t, j] // a[t, t]
                    if q:
                        a[:, j] = a[:, j] - q * a[:, t]
                        right[:, j] = right[:, j] - q * right[:, t]
                    if a[t, j] != 0:
                        a[:, [t, j]] = a[:, [j, t]]
                        right[:, [t, j]] = right[:, [j, t]]
                        dirty = True
        # Enforce divisibility of the remaining block by the pivot.
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i, j] % a[t, t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            a[t] = a[t] + a[offender]
            left[t] = left[t] + left[offender]
            continue
        if a[t, t] < 0:
            a[t] = -a[t]
            left[t] = -left[t]
        t += 1

    diag = [int(a[k, k]) for k in range(min(rows, cols))]
    return diag, left, right


def is_unimodular(m) -> bool:
    a = qmat(m)
    if a.shape[0] != a.shape[1] or not is_integral(a):
        return False
    return abs(det(a)) == 1


def random_unimodular(n: int, rng, steps: int = 12) -> np.ndarray:
    """Product of elementary integer operations; |det| = 1 by construction."""
    m = _int_eye(n)
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        m[i] = m[i] + c * m[j]
    if rng.random() < 0.5 and n > 1:
        m[[0, 1]] = m[[1, 0]]
    return m
