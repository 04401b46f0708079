"""Exact univariate polynomials over the rationals.

Coefficients are stored lowest degree first as ``fractions.Fraction``.
Everything here is exact: no floats enter at any point.  Besides the
ring operations the module provides Euclidean division, monic gcd,
square-free reduction, and Sturm chains with real-root counting and
isolation on rational intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("float coefficients are not allowed; use Fraction or int")
    return Fraction(x)


class Poly:
    """A rational polynomial, coefficients lowest degree first.

    The zero polynomial is represented by an empty coefficient tuple and
    has degree -1 by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def from_roots(roots: Sequence) -> "Poly":
        p = Poly.one()
        for r in roots:
            p = p * Poly((-_frac(r), 1))
        return p

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _frac(other)
            return Poly(tuple(c * a for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return Poly.zero(), Poly(rem)
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / div[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] * inv_lead
            quo[k] = c
            if c:
                for j, d in enumerate(div):
                    rem[k + j] -= c * d
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out, base = Poly.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure ----------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reversed(self) -> "Poly":
        """The reciprocal polynomial x^deg * p(1/x)."""
        return Poly(tuple(reversed(self.coeffs)))

    def shift_scale(self, scale) -> "Poly":
        """p(scale * x), exact."""
        s = _frac(scale)
        return Poly(tuple(c * s**i for i, c in enumerate(self.coeffs)))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+" if c > 0 else "-") + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'): same roots, all simple, monic."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree == 0:
        return Poly.one()
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


# -- Sturm chains ----------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a square-free polynomial.

    ``count(a, b)`` returns the exact number of real roots in the
    half-open interval (a, b] by Sturm's theorem.
    """

    chain: tuple[Poly, ...]

    @staticmethod
    def of(p: Poly) -> "SturmChain":
        p = squarefree_part(p)
        seq = [p]
        if p.degree >= 1:
            seq.append(p.derivative())
            while seq[-1].degree >= 1:
                r = -(seq[-2] % seq[-1])
                if r.is_zero():
                    break
                seq.append(r)
        return SturmChain(tuple(seq))

    def _variations(self, x) -> int:
        signs = []
        for q in self.chain:
            v = q(x)
            if v != 0:
                signs.append(1 if v > 0 else -1)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def _variations_at_inf(self, positive: bool) -> int:
        signs = []
        for q in self.chain:
            if q.is_zero():
                continue
            lead = q.leading()
            if not positive and q.degree % 2:
                lead = -lead
            signs.append(1 if lead > 0 else -1)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def count(self, a, b) -> int:
        """Number of real roots in (a, b]."""
        a, b = _frac(a), _frac(b)
        if a >= b:
            return 0
        return self._variations(a) - self._variations(b)

    def count_all(self) -> int:
        return self._variations_at_inf(False) - self._variations_at_inf(True)


def count_real_roots(p: Poly, a, b) -> int:
    """Distinct real roots of p in the open interval (a, b)."""
    a, b = _frac(a), _frac(b)
    sc = SturmChain.of(p)
    n = sc.count(a, b)
    if sc.chain[0](b) == 0:
        n -= 1
    return n


def isolate_real_root(p: Poly, a, b) -> tuple[Fraction, Fraction]:
    """A sign-change interval [lo, hi] within (a, b) around one root of p.

    Requires at least one root of p in the open interval (a, b).  Bisects
    on Sturm counts until the interval contains exactly one root of the
    square-free part and the endpoint values have opposite signs, so the
    claim is checkable by two sign evaluations.
    """
    q = squarefree_part(p)
    sc = SturmChain.of(q)

    def inside(x, y) -> int:
        n = sc.count(x, y)
        return n - 1 if q(y) == 0 else n

    lo, hi = _frac(a), _frac(b)
    if inside(lo, hi) < 1:
        raise ValueError("no root to isolate in the given interval")
    target = (hi - lo) / 64
    while True:
        narrow = hi - lo <= target
        if narrow and q(lo) != 0 and q(hi) != 0 and inside(lo, hi) == 1:
            return lo, hi
        mid = (lo + hi) / 2
        if q(mid) == 0:
            # Bisection landed exactly on the (simple) root: shrink a
            # symmetric window around it until it is the only root inside.
            eps = min(target, hi - lo) / 4
            while (q(mid - eps) == 0 or q(mid + eps) == 0
                   or inside(mid - eps, mid + eps) != 1):
                eps /= 2
            return mid - eps, mid + eps
        if inside(lo, mid) >= 1:
            hi = mid
        else:
            lo = mid


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """The unique polynomial of degree < len(points) through the points."""
    result = Poly.zero()
    xs = [(_frac(x), _frac(y)) for x, y in points]
    for i, (xi, yi) in enumerate(xs):
        if yi == 0:
            continue
        num = Poly.one()
        den = Fraction(1)
        for j, (xj, _) in enumerate(xs):
            if j == i:
                continue
            num = num * Poly((-xj, 1))
            den *= xi - xj
        result = result + num * (yi / den)
    return result
