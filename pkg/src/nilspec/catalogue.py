"""Bundled example algebras with expanding automorphisms.

Each entry pairs a Lie algebra file with an automorphism matrix file in
the shared text formats.  The directory can be overridden through the
``NILSPEC_CATALOGUE_DIR`` environment variable; the index file there
lists entries as ``<algebra-file> <matrix-file>`` per line.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path


class CatalogueError(RuntimeError):
    """The catalogue directory is missing or malformed."""


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    algebra_path: Path
    matrix_path: Path


def catalogue_dir() -> Path:
    override = os.environ.get("NILSPEC_CATALOGUE_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "catalogue"


def catalogue_entries() -> list[CatalogueEntry]:
    base = catalogue_dir()
    index = base / "index.txt"
    if not index.is_file():
        raise CatalogueError(f"catalogue index not found: {index}")
    entries = []
    for raw in index.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CatalogueError(f"{index}: bad index line {line!r}")
        alg, mat = base / parts[0], base / parts[1]
        for p in (alg, mat):
            if not p.is_file():
                raise CatalogueError(f"catalogue file missing: {p}")
        entries.append(CatalogueEntry(alg.stem, alg, mat))
    if not entries:
        raise CatalogueError(f"{index}: no entries")
    return entries


def golden_report_path() -> Path:
    return catalogue_dir() / "golden_report.txt"
