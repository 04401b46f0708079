"""Induced maps: duals, Kronecker products, exterior powers.

The degree-l exterior power of an n-by-n matrix is the C(n,l) matrix of
l-by-l minors over a fixed basis of strictly increasing index tuples in
lexicographic order.  Every module in this package shares that ordering,
so induced matrices compose without basis permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .linalg import char_poly, det, qmat, zeros
from .poly import Poly


@dataclass(frozen=True)
class ExteriorBasis:
    """Ordered basis of the degree-l exterior power of an n-space.

    Tuples are 0-based, strictly increasing, listed lexicographically;
    the list has length C(n, l).
    """

    ambient: int
    degree: int

    def __post_init__(self):
        if not 0 <= self.degree <= self.ambient:
            raise ValueError("degree out of range")

    @property
    def tuples(self) -> list[tuple[int, ...]]:
        return list(combinations(range(self.ambient), self.degree))

    @property
    def dim(self) -> int:
        return comb(self.ambient, self.degree)

    def index(self, tup: tuple[int, ...]) -> int:
        """Position of a strictly increasing tuple in the ordering."""
        idx = 0
        prev = -1
        k = self.degree
        for pos, t in enumerate(tup):
            for skipped in range(prev + 1, t):
                idx += comb(self.ambient - skipped - 1, k - pos - 1)
            prev = t
        return idx


def wedge_index_sign(indices: tuple[int, ...]) -> tuple[tuple[int, ...] | None, int]:
    """Sort wedge factors, tracking the permutation sign.

    Returns (sorted tuple, sign), or (None, 0) when an index repeats.
    """
    lst = list(indices)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a == b:
            return None, 0
    return tuple(lst), sign


def dual_map(m) -> np.ndarray:
    """The transpose, as the matrix of the dual map."""
    a = qmat(m) if not isinstance(m, np.ndarray) else m
    if a.shape[0] != a.shape[1]:
        raise ValueError("dual_map needs a square matrix")
    return a.T.copy()


def kronecker(a, b) -> np.ndarray:
    a = qmat(a) if not isinstance(a, np.ndarray) else a
    b = qmat(b) if not isinstance(b, np.ndarray) else b
    return np.kron(a, b)


def exterior_power(m, l: int) -> np.ndarray:
    """The l-th compound matrix on the shared lexicographic basis."""
    a = qmat(m) if not isinstance(m, np.ndarray) else m
    n, n2 = a.shape
    if n != n2:
        raise ValueError("exterior_power needs a square matrix")
    if not 0 <= l <= n:
        raise ValueError(f"degree {l} out of range for dimension {n}")
    basis = ExteriorBasis(n, l).tuples
    size = len(basis)
    out = zeros(size, size)
    for r, rows in enumerate(basis):
        for c, cols in enumerate(basis):
            sub = a[np.ix_(rows, cols)] if l else a[:0, :0]
            out[r, c] = det(sub) if l else Fraction(1)
    return out


def rational_roots(p: Poly) -> list[Fraction] | None:
    """All roots with multiplicity when p splits over the rationals,
    else None."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots: list[Fraction] = []
    work = p
    while work.degree > 0 and work.constant() == 0:
        roots.append(Fraction(0))
        work = work // Poly.x()
    while work.degree > 0:
        denom_lcm = 1
        for c in work.coeffs:
            denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in work.coeffs]
        a0, an = abs(ints[0]), abs(ints[-1])
        found = None
        for r in _divisors(a0):
            for s in _divisors(an):
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    if work(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        roots.append(found)
        work = work // Poly((-found, 1))
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


@dataclass(frozen=True)
class ExteriorSpectrumReport:
    """Brute-force cross-check of the exterior-power spectrum."""

    applicable: bool
    matches: bool | None
    detail: str


def char_poly_exterior_check(m, l: int) -> ExteriorSpectrumReport:
    """When the base spectrum is rational, confirm that the exterior
    power's spectrum is exactly the l-fold products over distinct index
    subsets.  Small matrices only: the oracle enumerates subsets."""
    a = qmat(m) if not isinstance(m, np.ndarray) else m
    n = a.shape[0]
    if n > 5:
        raise ValueError("oracle is restricted to n <= 5")
    base = rational_roots(char_poly(a))
    if base is None:
        return ExteriorSpectrumReport(False, None,
                                      "base spectrum not rational: oracle inapplicable")
    expected = sorted(
        _product(base[i] for i in subset)
        for subset in combinations(range(n), l)
    )
    actual = rational_roots(char_poly(exterior_power(a, l)))
    if actual is None:
        return ExteriorSpectrumReport(
            True, False, "exterior spectrum failed to split over the rationals")
    ok = expected == actual
    detail = f"expected {expected} got {actual}"
    return ExteriorSpectrumReport(True, ok, detail)


def _product(xs) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out
