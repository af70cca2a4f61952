"""Command-line frontend for the dilogarithm / TBA toolkit.

Subcommands: solve, classify, bounds, dual, recognize, search,
verify-identities, expand, ceff-estimate.  Matrices are entered as
exact fractions via -A (one entry for the rank-1 system, "inf"
allowed; three entries a b d for rank 2); --scale p/q multiplies all
entries, so "1/2 scaled (8 5; 5 4)" is `-A 8 5 4 --scale 1/2`.

Text reports go to standard output (first line is a version header,
suppressed by --no-header); diagnostics go to standard error.  --json
switches to a JSON document that validates against the shipped schema
(data/cli_output.schema.json): exact rationals appear as strings
"p/q", every inexact number as an object {"value": v, "tol": t}.

Exit codes: 0 success, 1 computation failure (range violation, no
solution found, failed identity, non-terminating series), 2 input
error (unknown subcommand, malformed fraction, missing flag).

The environment variable DILOGTBA_TOL sets the default recognition
tolerance (flag --tol overrides; built-in default 1e-9).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .analysis import bounds_on_c, classify_vs_one, dual
from .charges import ChargeMatch, recognize
from .errors import (
    CatalogError,
    DomainError,
    NonTerminatingSeries,
    RangeViolation,
    ScanFailure,
    SingularMatrixError,
    TailBoundError,
)
from .identities import cross_check_tba, load_catalog, parse_catalog, verify
from .qseries import FORMS, FORM_SYSTEMS, estimate_ceff, expand
from .search import (
    EXAMPLE_CONFIGS,
    SearchConfig,
    dedupe_by_duality,
    report_json,
    report_text,
    run_search,
)
from .tba import INFINITY, RationalSymmetricMatrix, check_range, solve_r1, solve_r2

__all__ = ["parse_and_dispatch", "main"]

_COMPUTE_ERRORS = (
    DomainError,
    RangeViolation,
    SingularMatrixError,
    ScanFailure,
    NonTerminatingSeries,
    TailBoundError,
    CatalogError,
)


class _InputError(Exception):
    """Malformed user input detected after argparse."""


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputError(f"malformed fraction for {what}: {text!r} ({exc})") from None


def _fr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _measured(value: float, tol: float):
    return {"value": value, "tol": tol}


def _matrix_json(A: RationalSymmetricMatrix):
    return {"a": _fr(A.a), "b": _fr(A.b), "d": _fr(A.d)}


def _matches_json(m: ChargeMatch, tol: float):
    return {
        "minimal": list(m.minimal) if m.minimal is not None else None,
        "parafermion": m.parafermion,
        "rational": _fr(Fraction(*m.rational)) if m.rational is not None else None,
        "residual": _measured(m.residual if math.isfinite(m.residual) else -1.0, tol),
    }


def _matches_text(m: ChargeMatch) -> str:
    kinds = m.ranked()
    if not kinds:
        return "matches: none"
    return "matches: " + "; ".join(f"{k} {desc}" for k, desc in kinds)


def _read_matrix(args) -> tuple[str, object]:
    """('r1', Fraction | INFINITY) or ('r2', RationalSymmetricMatrix)."""
    entries = args.A
    scale = Fraction(1)
    if getattr(args, "scale", None):
        scale = _parse_fraction(args.scale, "--scale")
        if scale <= 0:
            raise _InputError(f"--scale must be positive, got {args.scale}")
    if len(entries) == 1:
        raw = entries[0]
        if raw.lower() in ("inf", "infinity"):
            return "r1", INFINITY
        return "r1", _parse_fraction(raw, "entry a") * scale
    if len(entries) == 3:
        a, b, d = (_parse_fraction(t, f"entry {n}") for t, n in zip(entries, "abd"))
        return "r2", RationalSymmetricMatrix(a * scale, b * scale, d * scale)
    raise _InputError(f"-A takes one entry (rank 1) or three entries a b d (rank 2), got {len(entries)}")


def _emit(args, text_lines: list[str], json_doc: dict) -> None:
    if args.json:
        sys.stdout.write(json.dumps(json_doc, indent=2, sort_keys=True) + "\n")
        return
    out = []
    if not args.no_header:
        out.append(f"dilogtba {__version__}")
    out.extend(text_lines)
    sys.stdout.write("\n".join(out) + "\n")


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_solve(args) -> int:
    kind, data = _read_matrix(args)
    tol = args.tol
    if kind == "r1":
        sol = solve_r1(data)
        m = recognize(sol.c, tol=tol)
        a_repr = "inf" if data == INFINITY else _fr(data)
        lines = [
            f"rank-1 system, a = {a_repr}",
            f"x = {sol.x:.15f}",
            f"c = {sol.c:.15f}",
            _matches_text(m),
        ]
        doc = {
            "command": "solve",
            "rank": 1,
            "a": a_repr,
            "x": _measured(sol.x, 1e-14),
            "c": _measured(sol.c, 1e-13),
            "matches": _matches_json(m, tol),
        }
        _emit(args, lines, doc)
        return 0
    A = data
    sol = solve_r2(A, grid_n=args.grid_n, enforce_range=not args.no_range_check)
    m = recognize(sol.c, tol=tol)
    c_tol = max(sol.residual, 1e-15)
    lines = [
        f"matrix {A}",
        f"x = {sol.x:.15f}  y = {sol.y:.15f}",
        f"c = {sol.c:.15f}  residual {sol.residual:.3e}  multiplicity {sol.multiplicity}",
        _matches_text(m),
    ]
    if sol.boundary_flag:
        lines.append("note: boundary solution present (d = 0, 0 < b < 1/2)")
    if sol.principal_is_boundary:
        lines.append("note: only boundary solutions exist; reported c uses the boundary pair")
    doc = {
        "command": "solve",
        "rank": 2,
        "matrix": _matrix_json(A),
        "in_range": check_range(A),
        "x": _measured(sol.x, 1e-12),
        "y": _measured(sol.y, 1e-12),
        "c": _measured(sol.c, c_tol),
        "residual": _measured(sol.residual, 1e-15),
        "multiplicity": sol.multiplicity,
        "boundary_flag": sol.boundary_flag,
        "principal_is_boundary": sol.principal_is_boundary,
        "matches": _matches_json(m, tol),
    }
    _emit(args, lines, doc)
    return 0


def _cmd_classify(args) -> int:
    kind, A = _read_matrix(args)
    if kind != "r2":
        raise _InputError("classify needs a rank-2 matrix: -A a b d")
    res = classify_vs_one(A)
    lines = [f"matrix {A}", f"c vs 1: {res.relation}", f"reason: {res.reason}"]
    doc = {
        "command": "classify",
        "matrix": _matrix_json(A),
        "relation": res.relation,
        "reason": res.reason,
    }
    _emit(args, lines, doc)
    return 0


def _cmd_bounds(args) -> int:
    kind, A = _read_matrix(args)
    if kind != "r2":
        raise _InputError("bounds needs a rank-2 matrix: -A a b d")
    A, swapped = A.canonical()
    res = bounds_on_c(A)
    lines = [
        f"matrix {A}" + ("  (entries swapped to a >= d)" if swapped else ""),
        f"bounds: {res.lower:.12f} <= c <= {res.upper:.12f}",
        f"case: {res.case_tag}",
    ]
    doc = {
        "command": "bounds",
        "matrix": _matrix_json(A),
        "lower": _measured(res.lower, 1e-12),
        "upper": _measured(res.upper, 1e-12),
        "case": res.case_tag,
    }
    _emit(args, lines, doc)
    return 0


def _cmd_dual(args) -> int:
    kind, A = _read_matrix(args)
    if kind != "r2":
        raise _InputError("dual needs a rank-2 matrix: -A a b d")
    B = dual(A)
    in_range = check_range(B.canonical()[0])
    c_a = solve_r2(A, enforce_range=not args.no_range_check).c
    c_b = solve_r2(B.canonical()[0], enforce_range=False).c
    lines = [
        f"matrix {A}",
        f"dual   {B}",
        f"dual in range: {'yes' if in_range else 'no'}",
        f"c = {c_a:.15f}",
        f"c[dual] = {c_b:.15f}",
        f"c + c[dual] = {c_a + c_b:.15f}",
    ]
    doc = {
        "command": "dual",
        "matrix": _matrix_json(A),
        "dual": _matrix_json(B),
        "dual_in_range": in_range,
        "c": _measured(c_a, 1e-12),
        "c_dual": _measured(c_b, 1e-12),
        "c_sum": _measured(c_a + c_b, 1e-11),
    }
    _emit(args, lines, doc)
    return 0


def _cmd_recognize(args) -> int:
    raw = args.value
    try:
        value = float(Fraction(raw)) if "/" in raw else float(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputError(f"malformed value {raw!r} ({exc})") from None
    m = recognize(value, tol=args.tol, max_st=args.max_st, max_n=args.max_n,
                  max_den=args.max_den)
    lines = [f"value {value!r}", _matches_text(m)]
    doc = {
        "command": "recognize",
        "value": _measured(value, args.tol),
        "matches": _matches_json(m, args.tol),
    }
    _emit(args, lines, doc)
    return 0


def _cmd_search(args) -> int:
    if args.config is not None:
        cfg = EXAMPLE_CONFIGS[args.config]
        if args.tol != cfg.tolerance:
            cfg = dataclasses.replace(cfg, tolerance=args.tol)
    else:
        cfg = SearchConfig(
            max_numerator=args.max_num,
            max_denominator=args.max_den_entries,
            entry_min=_parse_fraction(args.entry_min, "--entry-min") if args.entry_min else None,
            entry_max=_parse_fraction(args.entry_max, "--entry-max") if args.entry_max else None,
            tolerance=args.tol,
            require_uniqueness=not args.keep_nonunique,
            fix_d=_parse_fraction(args.fix_d, "--fix-d") if args.fix_d is not None else None,
            a_eq_d=args.a_eq_d,
            grid_n=args.grid_n,
        )
    rep = run_search(cfg)
    if args.dedupe:
        rep.admissible = dedupe_by_duality(rep.admissible)
    if args.json:
        doc = {"command": "search", "report": json.loads(report_json(rep, tol=cfg.tolerance))}
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        header = [] if args.no_header else [f"dilogtba {__version__}"]
        sys.stdout.write("\n".join(header + [report_text(rep)]))
    return 0


def _cmd_verify_identities(args) -> int:
    if args.catalog is not None:
        try:
            with open(args.catalog, encoding="ascii") as fh:
                entries = parse_catalog(fh.read())
        except (OSError, UnicodeDecodeError) as exc:
            raise _InputError(f"cannot read catalog {args.catalog!r}: {exc}") from None
    else:
        entries = load_catalog()
    precision = args.precision
    lines = []
    rows = []
    all_pass = True
    for entry in entries:
        residual = verify(entry, precision=precision)
        ok = residual <= precision
        all_pass = all_pass and ok
        cross = None
        if args.cross_check and entry.matrix is not None:
            cc = cross_check_tba(entry)
            cross = {
                "c_residual": _measured(cc.c_residual, 1e-12),
                "coordinate_distance": _measured(cc.coordinate_distance, 1e-10),
            }
        tag = "PASS" if ok else "FAIL"
        extra = ""
        if cross is not None:
            extra = (f"  cross-check c {cc.c_residual:.2e}"
                     f" coords {cc.coordinate_distance:.2e}")
        lines.append(f"{entry.name:<24} target {_fr(entry.target):<6} residual {residual:.3e}  {tag}{extra}")
        rows.append({
            "name": entry.name,
            "target": _fr(entry.target),
            "residual": _measured(residual, precision),
            "pass": ok,
            "cross_check": cross,
        })
    lines.append(f"{'all entries pass' if all_pass else 'FAILURES present'} "
                 f"({len(entries)} entries, precision {precision:g})")
    doc = {
        "command": "verify-identities",
        "precision": precision,
        "entries": rows,
        "all_pass": all_pass,
    }
    _emit(args, lines, doc)
    return 0 if all_pass else 1


def _cmd_expand(args) -> int:
    form = FORMS[args.form]
    series = expand(form, args.order)
    text = series.to_text()
    lines = [
        f"form {args.form}, order {args.order}, exponent denominator {series.denom}",
        text.rstrip("\n"),
    ]
    doc = {
        "command": "expand",
        "form": args.form,
        "order": args.order,
        "denominator": series.denom,
        "coefficients": [
            [_fr(Fraction(k, series.denom)), coeff]
            for k, coeff in sorted(series.coeffs.items())
        ],
    }
    _emit(args, lines, doc)
    return 0


def _cmd_ceff(args) -> int:
    form = FORMS[args.form]
    if args.eps:
        try:
            eps = tuple(float(t) for t in args.eps.split(","))
        except ValueError as exc:
            raise _InputError(f"malformed --eps list {args.eps!r} ({exc})") from None
    else:
        eps = (0.20, 0.12, 0.07, 0.04)
    est = estimate_ceff(form, eps_list=eps)
    expected = FORM_SYSTEMS.get(args.form, (None, None))[1]
    lines = [f"form {args.form}", f"ceff estimate = {est:.6f}"]
    doc = {
        "command": "ceff-estimate",
        "form": args.form,
        "eps": list(eps),
        "estimate": _measured(est, 0.02),
    }
    if expected is not None:
        dev = abs(est - float(expected))
        lines.append(f"expected c = {_fr(expected)} (deviation {dev:.2e})")
        doc["expected"] = _fr(expected)
        doc["deviation"] = _measured(dev, 0.02)
    else:
        doc["expected"] = None
        doc["deviation"] = None
    _emit(args, lines, doc)
    return 0


# ---------------------------------------------------------------------------
# parser


# tokens like "-3/2" are matrix entries, not option flags; argparse only
# knows plain negative numbers, so widen its matcher to cover fractions
_NEGATIVE_TOKEN = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _build_parser() -> argparse.ArgumentParser:
    default_tol = float(os.environ.get("DILOGTBA_TOL", "1e-9"))

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--no-header", action="store_true",
                        help="suppress the version header on text output")
    common.add_argument("--tol", type=float, default=default_tol,
                        help="recognition tolerance (default from DILOGTBA_TOL or 1e-9)")

    matrix = argparse.ArgumentParser(add_help=False)
    matrix.add_argument("-A", nargs="+", required=True, metavar="ENTRY",
                        help="matrix entries: a (rank 1, 'inf' allowed) or a b d (rank 2)")
    matrix.add_argument("--scale", metavar="P/Q", default=None,
                        help="multiply all entries by an exact fraction")

    p = argparse.ArgumentParser(
        prog="dilogtba",
        description="Rogers dilogarithm sums, TBA fixed points, and charge recognition.",
        epilog="Environment: DILOGTBA_TOL sets the default recognition tolerance.",
    )
    p.add_argument("--version", action="version", version=f"dilogtba {__version__}")
    p._negative_number_matcher = _NEGATIVE_TOKEN
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", parents=[common, matrix],
                        help="solve the TBA system and recognize c")
    sp._negative_number_matcher = _NEGATIVE_TOKEN
    sp.add_argument("--grid-n", type=int, default=100_000, help="scan resolution")
    sp.add_argument("--no-range-check", action="store_true",
                    help="solve even when the entry-range condition fails")
    sp.set_defaults(func=_cmd_solve)

    sp = sub.add_parser("classify", parents=[common, matrix],
                        help="exact classification of c against 1")
    sp._negative_number_matcher = _NEGATIVE_TOKEN
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("bounds", parents=[common, matrix],
                        help="two-sided bounds on c (needs a >= d > 0)")
    sp._negative_number_matcher = _NEGATIVE_TOKEN
    sp.set_defaults(func=_cmd_bounds)

    sp = sub.add_parser("dual", parents=[common, matrix],
                        help="dual matrix (1/4) A^{-1} and both c values")
    sp._negative_number_matcher = _NEGATIVE_TOKEN
    sp.add_argument("--no-range-check", action="store_true",
                    help="solve the input matrix even when out of range")
    sp.set_defaults(func=_cmd_dual)

    sp = sub.add_parser("recognize", parents=[common],
                        help="match a value against the charge spectra")
    sp._negative_number_matcher = _NEGATIVE_TOKEN
    sp.add_argument("value", help="decimal or fraction p/q")
    sp.add_argument("--max-st", type=int, default=200, help="largest |st| product")
    sp.add_argument("--max-n", type=int, default=60, help="largest parafermionic n")
    sp.add_argument("--max-den", type=int, default=10_000,
                    help="largest denominator for plain-rational matches")
    sp.set_defaults(func=_cmd_recognize)

    sp = sub.add_parser("search", parents=[common],
                        help="enumerate matrices and report admissible candidates")
    sp.add_argument("--config", choices=sorted(EXAMPLE_CONFIGS), default=None,
                    help="use a named example configuration")
    sp.add_argument("--max-den-entries", type=int, default=2,
                    help="largest entry denominator")
    sp.add_argument("--max-num", type=int, default=8, help="largest entry numerator")
    sp.add_argument("--entry-min", default=None, metavar="P/Q")
    sp.add_argument("--entry-max", default=None, metavar="P/Q")
    sp.add_argument("--fix-d", default=None, metavar="P/Q", help="pin d to one value")
    sp.add_argument("--a-eq-d", action="store_true", help="restrict to a = d")
    sp.add_argument("--keep-nonunique", action="store_true",
                    help="treat multi-solution matrices as ordinary candidates")
    sp.add_argument("--grid-n", type=int, default=20_001, help="scan resolution")
    sp.add_argument("--dedupe", action="store_true",
                    help="collapse duality-paired candidates to the c <= 1 member")
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("verify-identities", parents=[common],
                        help="verify the two-term dilogarithm identity catalog")
    sp.add_argument("--precision", type=float, default=1e-12,
                    help="required residual bound (below 1e-13 switches to mpmath)")
    sp.add_argument("--catalog", default=None, metavar="PATH",
                    help="catalog file (default: the shipped catalog)")
    sp.add_argument("--cross-check", action="store_true",
                    help="also solve the attached TBA systems and compare")
    sp.set_defaults(func=_cmd_verify_identities)

    sp = sub.add_parser("expand", parents=[common],
                        help="exact q-expansion of a fermionic form")
    sp.add_argument("form", choices=sorted(FORMS), help="registered form name")
    sp.add_argument("--order", type=int, default=20,
                    help="expansion order in integer powers of q")
    sp.set_defaults(func=_cmd_expand)

    sp = sub.add_parser("ceff-estimate", parents=[common],
                        help="effective central charge from the q -> 1 limit")
    sp.add_argument("form", choices=sorted(FORMS), help="registered form name")
    sp.add_argument("--eps", default=None, metavar="E1,E2,...",
                    help="comma-separated ln(1/q) samples (default 0.20,0.12,0.07,0.04)")
    sp.set_defaults(func=_cmd_ceff)

    return p


def parse_and_dispatch(argv: list[str]) -> int:
    """Parse argv (without the program name) and run one subcommand."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _COMPUTE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
