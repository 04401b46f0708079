"""Command-line entry point.

One binary, subcommand style.  All numeric input and output is in exact
rational notation.  ``--machine`` switches every subcommand to a single
structured line per result; those lines are deterministic across runs
and are what the golden-report comparison of ``verify-paper`` pins down.

Exit codes: 0 success, 1 negative verdict (a failed --expect, an
inconsistency alarm, or a golden-report mismatch), 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import catalogue as cat
from .formats import (
    ParseError,
    load_lie,
    load_matrix,
    parse_betti_arg,
    parse_poly_arg,
    write_matrix_text,
)
from .lie import (
    ExpansionContradictionError,
    JacobiViolation,
    NotBracketPreserving,
    NotInvertible,
    betti,
    certify_expanding_on_cohomology,
    check_automorphism,
)
from .linalg import char_poly, image_basis, kernel_basis, rank
from .multilinear import exterior_power
from .obstruction import (
    AttractorPairSpec,
    BettiVector,
    gysin_boundary_betti,
    sphere_theorem_check,
    toric_corollary_check,
)
from .snf import smith_normal_form
from .spectra import is_expanding_matrix, is_expanding_poly


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _columns_text(cols) -> str:
    if not cols:
        return "(empty basis)"
    import numpy as np

    m = np.empty((len(cols[0]), len(cols)), dtype=object)
    for j, v in enumerate(cols):
        m[:, j] = v
    return write_matrix_text(m).rstrip("\n")


# -- matrix subcommands ------------------------------------------------


def _cmd_matrix(args, out) -> int:
    m = load_matrix(args.file)
    op = args.op
    if op == "rank":
        out(f"matrix-rank rank={rank(m)}" if args.machine else f"rank {rank(m)}")
    elif op == "kernel":
        basis = kernel_basis(m)
        if args.machine:
            body = ";".join(_csv(v) for v in basis)
            out(f"matrix-kernel dim={len(basis)} basis={body}")
        else:
            out(f"kernel dimension {len(basis)}")
            out(_columns_text(basis))
    elif op == "image":
        basis = image_basis(m)
        if args.machine:
            body = ";".join(_csv(v) for v in basis)
            out(f"matrix-image dim={len(basis)} basis={body}")
        else:
            out(f"image dimension {len(basis)}")
            out(_columns_text(basis))
    elif op == "charpoly":
        p = char_poly(m)
        out(f"matrix-charpoly poly={p}" if args.machine else str(p))
    elif op == "snf":
        diag, left, right = smith_normal_form(m)
        if args.machine:
            out(f"matrix-snf diag={_csv(diag)}")
        else:
            out(f"invariant factors: {_csv(diag)}")
    return 0


def _cmd_exterior(args, out) -> int:
    m = load_matrix(args.file)
    result = exterior_power(m, args.degree)
    out(write_matrix_text(result).rstrip("\n"))
    return 0


# -- spectra -----------------------------------------------------------


def _cmd_spectra(args, out) -> int:
    if args.poly is not None:
        p = parse_poly_arg(args.poly)
        verdict = is_expanding_poly(p)
        label = f"poly={p}"
    else:
        m = load_matrix(args.matrix)
        p = char_poly(m)
        verdict = is_expanding_poly(p)
        label = f"charpoly={p}"
    machine_line = f"spectra {label} {verdict.machine()}"
    if args.machine:
        out(machine_line)
    else:
        out(f"{label.split('=', 1)[1]}")
        out(verdict.describe())
        out(machine_line)
    if args.expect and args.expect != verdict.verdict.lower():
        return 1
    return 0


# -- lie ---------------------------------------------------------------


def _cmd_lie_betti(args, out) -> int:
    g = load_lie(args.algebra)
    dims = betti(g)
    if args.machine:
        out(f"lie-betti algebra={g.name or 'input'} betti={_csv(dims)}")
    else:
        out(" ".join(str(d) for d in dims))
    return 0


def _cmd_lie_check_aut(args, out) -> int:
    g = load_lie(args.algebra)
    m = load_matrix(args.matrix)
    try:
        check_automorphism(g, m)
    except (NotInvertible, NotBracketPreserving) as exc:
        if args.machine:
            kind = type(exc).__name__
            out(f"lie-check-aut algebra={g.name or 'input'} valid=false reason={kind}")
        else:
            out(f"not an automorphism: {exc}")
        return 1
    out(f"lie-check-aut algebra={g.name or 'input'} valid=true"
        if args.machine else "valid automorphism")
    return 0


def certificate_lines(name: str, cert) -> list[str]:
    lines = [f"lie-certify algebra={name} base={cert.base_verdict.verdict}"]
    for e in cert.degrees:
        if e.degree == 0:
            continue
        lines.append(
            f"lie-certify algebra={name} degree={e.degree} dim={e.dim} "
            f"charpoly={e.char_poly} verdict={e.verdict.verdict}")
    return lines


def _cmd_lie_certify(args, out) -> int:
    g = load_lie(args.algebra)
    m = load_matrix(args.matrix)
    aut = check_automorphism(g, m)
    cert = certify_expanding_on_cohomology(aut)
    name = g.name or "input"
    if args.machine:
        for line in certificate_lines(name, cert):
            out(line)
    else:
        out(f"automorphism of {name}: {cert.base_verdict.verdict}")
        for e in cert.degrees:
            if e.degree == 0:
                continue
            out(f"  degree {e.degree}: dim {e.dim}, char poly {e.char_poly}, "
                f"{e.verdict.verdict}")
    if args.expect == "expanding" and not cert.all_positive_expanding():
        return 1
    return 0


# -- bundle / theorem ---------------------------------------------------


def _cmd_bundle_gysin(args, out) -> int:
    beta = parse_betti_arg(args.betti)
    result = gysin_boundary_betti(beta, args.q)
    if args.machine:
        out(f"bundle-gysin q={args.q} base={_csv(beta)} boundary={_csv(result)}")
    else:
        out(_csv(result))
    return 0


def _sphere_spec(n, q1, q2, betti1, betti2) -> AttractorPairSpec:
    b1 = parse_betti_arg(betti1) if betti1 else BettiVector.ones(n - q1 + 1)
    b2 = parse_betti_arg(betti2) if betti2 else BettiVector.ones(n - q2 + 1)
    return AttractorPairSpec(n=n, q1=q1, q2=q2, betti1=b1, betti2=b2)


def _cmd_theorem_sphere(args, out) -> int:
    spec = _sphere_spec(args.n, args.q1, args.q2, args.betti1, args.betti2)
    verdict = sphere_theorem_check(spec)
    machine_line = (f"theorem-sphere n={args.n} q1={args.q1} q2={args.q2} "
                    f"{verdict.machine()}")
    if args.machine:
        out(machine_line)
    else:
        out(verdict.tag)
        if verdict.tag == "SphereForced":
            out(f"ambient Betti vector: {_csv(verdict.manifold_betti)}")
        elif verdict.tag == "Case1Contradiction":
            out(f"degree {verdict.degree}: image bound {verdict.image_bound} "
                f"< required {verdict.required}")
        else:
            out(verdict.reason)
        out(machine_line)
    return 0


def _cmd_theorem_toric(args, out) -> int:
    report = toric_corollary_check(args.n)
    if args.machine:
        out(f"theorem-toric {report.machine()}")
    else:
        out(report.describe())
        out(f"theorem-toric {report.machine()}")
    return 0


# -- verify-paper -------------------------------------------------------


def build_verification_report() -> list[str]:
    """Machine lines for every catalogued pair and the obstruction grid."""
    lines: list[str] = []
    for entry in cat.catalogue_entries():
        try:
            g = load_lie(entry.algebra_path)
            g.name = entry.name
            dims = betti(g)
            lines.append(f"lie-betti algebra={entry.name} betti={_csv(dims)}")
            aut = check_automorphism(g, load_matrix(entry.matrix_path))
            cert = certify_expanding_on_cohomology(aut)
            lines.extend(certificate_lines(entry.name, cert))
        except (JacobiViolation, NotInvertible, NotBracketPreserving,
                ParseError, ValueError) as exc:
            raise cat.CatalogueError(
                f"catalogue entry {entry.name} ({entry.algebra_path}): {exc}")
    for n in range(3, 9):
        spec = AttractorPairSpec(n, 2, 2, BettiVector.ones(n - 1),
                                 BettiVector.ones(n - 1))
        lines.append(f"theorem-sphere n={n} q1=2 q2=2 "
                     f"{sphere_theorem_check(spec).machine()}")
        if n >= 4:
            spec3 = AttractorPairSpec(n, 2, 3, BettiVector.ones(n - 1),
                                      BettiVector.ones(n - 2))
            lines.append(f"theorem-sphere n={n} q1=2 q2=3 "
                         f"{sphere_theorem_check(spec3).machine()}")
        lines.append(f"theorem-toric {toric_corollary_check(n).machine()}")
    return lines


def _cmd_verify(args, out) -> int:
    try:
        lines = build_verification_report()
    except cat.CatalogueError as exc:
        raise _Failure(2, str(exc))
    except (JacobiViolation, NotInvertible, NotBracketPreserving,
            ParseError) as exc:
        raise _Failure(2, f"corrupt catalogue: {exc}")
    golden_path = cat.golden_report_path()
    if not golden_path.is_file():
        raise _Failure(2, f"golden report not found: {golden_path}")
    golden = golden_path.read_text().splitlines()
    mismatches = [
        f"line {i + 1}: expected {g!r}, got {l!r}"
        for i, (g, l) in enumerate(zip(golden, lines)) if g != l
    ]
    if len(golden) != len(lines):
        mismatches.append(f"line count: expected {len(golden)}, got {len(lines)}")
    if args.machine:
        for line in lines:
            out(line)
    else:
        out(f"{'entry':<46} result")
        out("-" * 72)
        for line in lines:
            head, _, rest = line.partition(" ")
            out(f"{head:<14} {rest}")
        out("-" * 72)
    if mismatches:
        for m in mismatches:
            out(f"MISMATCH {m}")
        out("verify-paper: FAIL")
        return 1
    out("verify-paper: PASS" if not args.machine else "verify-paper=PASS")
    return 0


# -- dispatch -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nilspec",
        description="Exact certification toolkit: Lie algebra cohomology, "
                    "expansion verdicts, and Betti obstruction checks.")
    top.add_argument("--machine", action="store_true",
                     help="one structured line per result")
    sub = top.add_subparsers(dest="command", required=True)

    m = sub.add_parser("matrix", help="exact matrix utilities")
    msub = m.add_subparsers(dest="op", required=True)
    for op in ("rank", "kernel", "image", "charpoly", "snf"):
        p = msub.add_parser(op)
        p.add_argument("file")
        p.set_defaults(func=_cmd_matrix)
    p = msub.add_parser("exterior-power",
                        help="compound matrix of the given degree")
    p.add_argument("file")
    p.add_argument("degree", type=int)
    p.set_defaults(func=_cmd_exterior)

    s = sub.add_parser("spectra", help="expansion verdicts")
    ssub = s.add_subparsers(dest="op", required=True)
    p = ssub.add_parser("certify")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly",
                       help="coefficients, highest degree first: 1,-5,6")
    group.add_argument("--matrix", help="matrix file")
    p.add_argument("--expect", choices=["expanding", "notexpanding"])
    p.set_defaults(func=_cmd_spectra)

    l = sub.add_parser("lie", help="Lie algebra cohomology")
    lsub = l.add_subparsers(dest="op", required=True)
    p = lsub.add_parser("betti")
    p.add_argument("algebra")
    p.set_defaults(func=_cmd_lie_betti)
    p = lsub.add_parser("check-aut")
    p.add_argument("algebra")
    p.add_argument("matrix")
    p.set_defaults(func=_cmd_lie_check_aut)
    p = lsub.add_parser("certify")
    p.add_argument("algebra")
    p.add_argument("matrix")
    p.add_argument("--expect", choices=["expanding"])
    p.set_defaults(func=_cmd_lie_certify)

    b = sub.add_parser("bundle", help="sphere bundle Betti arithmetic")
    bsub = b.add_subparsers(dest="op", required=True)
    p = bsub.add_parser("gysin")
    p.add_argument("--betti", required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_bundle_gysin)

    t = sub.add_parser("theorem", help="obstruction replays")
    tsub = t.add_subparsers(dest="op", required=True)
    p = tsub.add_parser("sphere-check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q1", type=int, default=2)
    p.add_argument("--q2", type=int, default=2)
    p.add_argument("--betti1")
    p.add_argument("--betti2")
    p.set_defaults(func=_cmd_theorem_sphere)
    p = tsub.add_parser("toric")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_theorem_toric)

    p = sub.add_parser("verify-paper",
                       help="run the full built-in certification battery "
                            "against the golden report")
    p.set_defaults(func=_cmd_verify)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = print
    try:
        return args.func(args, out)
    except _Failure as exc:
        print(exc.message, file=sys.stderr)
        return exc.code
    except ExpansionContradictionError as exc:
        print(f"ALARM: {exc}", file=sys.stderr)
        return 1
    except (ParseError, FileNotFoundError, JacobiViolation, NotInvertible,
            NotBracketPreserving, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
