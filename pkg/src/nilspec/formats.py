"""Text formats for matrices, Lie algebras, polynomials, Betti vectors.

Matrix files: a header line ``rows cols`` followed by ``rows`` lines of
``cols`` whitespace-separated rationals written ``p`` or ``p/q``.  Lie
algebra files: a header ``dim n`` followed by lines ``i j k c`` meaning
[X_i, X_j] has coefficient c on X_k (1-based, i < j, omitted entries are
zero).  Lines starting with ``#`` and blank lines are ignored in both.
All numbers are exact rationals; decimals are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import numpy as np

from .lie import LieAlgebra
from .linalg import qmat
from .obstruction import BettiVector
from .poly import Poly


class ParseError(ValueError):
    """Input text did not match the documented format."""

    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


def _rational(token: str, source: str, line: int) -> Fraction:
    try:
        if "." in token:
            raise ValueError("decimal notation")
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(source, line,
                         f"expected a rational like 3 or -5/7, got {token!r} ({exc})")


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((idx, line))
    return out


def parse_matrix_text(text: str, source: str = "<matrix>") -> np.ndarray:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(source, 1, "empty matrix file")
    ln, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(source, ln, f"expected header 'rows cols', got {header!r}")
    rows, cols = int(parts[0]), int(parts[1])
    if len(lines) - 1 != rows:
        raise ParseError(source, ln,
                         f"expected {rows} data lines, found {len(lines) - 1}")
    data = []
    for ln, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(source, ln,
                             f"expected {cols} entries, found {len(tokens)}")
        data.append([_rational(t, source, ln) for t in tokens])
    return qmat(data)


def write_matrix_text(m: np.ndarray) -> str:
    rows, cols = m.shape
    lines = [f"{rows} {cols}"]
    for i in range(rows):
        lines.append(" ".join(str(Fraction(m[i, j])) for j in range(cols)))
    return "\n".join(lines) + "\n"


def parse_lie_text(text: str, source: str = "<lie>") -> LieAlgebra:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(source, 1, "empty Lie algebra file")
    ln, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
        raise ParseError(source, ln, f"expected header 'dim n', got {header!r}")
    n = int(parts[1])
    brackets: dict[tuple[int, int], list[Fraction]] = {}
    for ln, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 4:
            raise ParseError(source, ln,
                             f"expected 'i j k c', found {len(tokens)} tokens")
        try:
            i, j, k = int(tokens[0]), int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(source, ln, "indices must be integers")
        if not (1 <= i < j <= n) or not 1 <= k <= n:
            raise ParseError(source, ln,
                             f"indices need 1 <= i < j <= {n} and 1 <= k <= {n}")
        c = _rational(tokens[3], source, ln)
        vec = brackets.setdefault((i - 1, j - 1), [Fraction(0)] * n)
        vec[k - 1] += c
    name = Path(source).stem if source not in ("<lie>", "<stdin>") else ""
    return LieAlgebra(n, brackets, name=name)


def load_matrix(path) -> np.ndarray:
    p = Path(path)
    return parse_matrix_text(p.read_text(), str(p))


def load_lie(path) -> LieAlgebra:
    p = Path(path)
    return parse_lie_text(p.read_text(), str(p))


def parse_poly_arg(arg: str, source: str = "<poly>") -> Poly:
    """Comma list, highest degree first: '1,-5,6' is x^2 - 5x + 6."""
    tokens = [t.strip() for t in arg.split(",") if t.strip()]
    if not tokens:
        raise ParseError(source, 1, "empty coefficient list")
    coeffs = [_rational(t, source, 1) for t in tokens]
    return Poly(tuple(reversed(coeffs)))


def parse_betti_arg(arg: str, source: str = "<betti>") -> BettiVector:
    tokens = [t.strip() for t in arg.split(",") if t.strip()]
    try:
        return BettiVector(int(t) for t in tokens)
    except ValueError as exc:
        raise ParseError(source, 1, str(exc))
