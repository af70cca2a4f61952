"""Systematic search for rational symmetric matrices with rational c[A].

Matrices A = ((a, b), (b, d)) are enumerated over exact fractions with
bounded numerator and denominator, canonicalized to a >= d, and pushed
through a cheap-to-expensive pipeline:

    entry range check (exact)
    -> classification of c vs 1 (exact, recorded)
    -> two-sided bounds vs the recognition spectra (prune, d > 0 only)
    -> solve the TBA system (grid scan + bisection)
    -> recognize c against minimal / parafermionic / rational spectra

Matrices whose scan finds several interior solutions go to a separate
"nonunique" section (all solutions listed) instead of the admissible
list when require_uniqueness is set.  Solver failures are recorded per
matrix, never fatal.  Candidates whose best match residual exceeds
1e-9 are re-solved on a finer grid before acceptance and flagged
suspect.  Results are deterministic and ordered by (largest entry
denominator, a, d, b).

dedupe_by_duality collapses pairs (A, (1/4) A^{-1}) that are both
present to the representative with c <= 1, recording the partner and
its c value on the kept candidate.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .analysis import (
    BoundsResult,
    ClassificationResult,
    bounds_on_c,
    classify_vs_one,
    dual,
    uniqueness_guarantee,
)
from .charges import ChargeMatch, recognize
from .errors import ScanFailure, SingularMatrixError
from .tba import INFINITY, RationalSymmetricMatrix, TbaSolution, _as_fraction, check_range, solve_r2

__all__ = [
    "SearchConfig",
    "PropFlags",
    "Candidate",
    "SearchReport",
    "run_search",
    "dedupe_by_duality",
    "report_text",
    "report_json",
    "EXAMPLE_CONFIGS",
]

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SearchConfig:
    """Enumeration bounds and pipeline switches for run_search.

    Entries are fractions p/q with 0 <= p <= max_numerator and
    1 <= q <= max_denominator, further clipped to
    [entry_min, entry_max] when given; b additionally takes negative
    values (subject to the range condition b >= -min(a, d)).
    tolerance is the recognition tolerance (at least the solver floor
    of 1e-10); max_st, max_n, max_den bound the charge spectra as in
    module charges.  fix_d pins d to one exact value; a_eq_d restricts
    to the symmetric family a = d.  grid_n is the scan resolution used
    for search solves (suspects re-solve at 20x).
    """

    max_numerator: int = 8
    max_denominator: int = 2
    entry_min: Fraction | None = None
    entry_max: Fraction | None = None
    tolerance: float = 1e-9
    max_st: int = 200
    max_n: int = 60
    max_den: int = 10_000
    require_uniqueness: bool = True
    fix_d: Fraction | None = None
    a_eq_d: bool = False
    grid_n: int = 20_001

    def __post_init__(self):
        if self.max_numerator < 1 or self.max_denominator < 1:
            raise ValueError("max_numerator and max_denominator must be positive")
        if self.tolerance < 1e-10:
            raise ValueError(f"tolerance {self.tolerance} is below the solver floor 1e-10")
        for name in ("entry_min", "entry_max", "fix_d"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, _as_fraction(v, name))

    def entry_values(self) -> list[Fraction]:
        """Nonnegative entry values within the bounds, ascending."""
        vals = set()
        for q in range(1, self.max_denominator + 1):
            for p in range(0, self.max_numerator + 1):
                v = Fraction(p, q)
                if self.entry_min is not None and v < self.entry_min:
                    continue
                if self.entry_max is not None and v > self.entry_max:
                    continue
                vals.add(v)
        return sorted(vals)


@dataclass(frozen=True)
class PropFlags:
    """Exact-predicate results recorded for a candidate."""

    classification: ClassificationResult
    uniqueness_guarantee: bool
    bounds: BoundsResult | None


@dataclass(frozen=True)
class Candidate:
    """One admissible matrix: solved, recognized, and annotated."""

    A: RationalSymmetricMatrix
    c: float
    matches: ChargeMatch
    solution: TbaSolution
    prop_flags: PropFlags
    suspect: bool = False
    dual_partner: RationalSymmetricMatrix | None = None
    dual_c: float | None = None


@dataclass
class SearchReport:
    """Search outcome: admissible candidates plus the side sections.

    Iterating the report iterates the admissible list.
    """

    admissible: list[Candidate] = field(default_factory=list)
    nonunique: list[Candidate] = field(default_factory=list)
    failures: list[tuple[RationalSymmetricMatrix, str]] = field(default_factory=list)
    scanned: int = 0
    pruned: int = 0
    solved: int = 0

    def __iter__(self):
        return iter(self.admissible)

    def __len__(self):
        return len(self.admissible)


def _recognition_targets(cfg: SearchConfig) -> list[float]:
    """The discrete minimal and parafermionic spectra within [0, 2]."""
    targets = set()
    for n in range(2, cfg.max_st + 1):
        for c in (1.0 - 6.0 / n, 1.0 + 6.0 / n):
            if 0.0 <= c <= 2.0:
                targets.add(c)
    for n in range(2, cfg.max_n + 1):
        targets.add(2.0 * (n - 1) / (n + 2))
    return sorted(targets)


def _order_key(A: RationalSymmetricMatrix):
    return (A.max_denominator(), A.a, A.d, A.b)


def run_search(cfg: SearchConfig) -> SearchReport:
    """Enumerate, filter, solve, and recognize; see the module docstring."""
    targets = _recognition_targets(cfg)
    margin = 1e-6
    report = SearchReport()

    values = cfg.entry_values()
    b_values = sorted({v for v in values} | {-v for v in values})

    matrices = []
    for a in values:
        d_candidates = values
        if cfg.fix_d is not None:
            d_candidates = [cfg.fix_d]
        if cfg.a_eq_d:
            d_candidates = [a]
        for d in d_candidates:
            if d > a:
                continue  # canonical orientation a >= d
            for b in b_values:
                A = RationalSymmetricMatrix(a, b, d)
                if not check_range(A):
                    continue
                if a == 0 and d == 0 and b == _HALF:
                    continue  # solution continuum, not a discrete system
                matrices.append(A)
    matrices.sort(key=_order_key)
    report.scanned = len(matrices)

    for A in matrices:
        classification = classify_vs_one(A)
        bounds = None
        if A.a >= A.d > 0:
            bounds = bounds_on_c(A)
            lo, hi = bounds.lower - margin, bounds.upper + margin
            if not any(lo <= t <= hi for t in targets):
                report.pruned += 1
                continue

        try:
            sol = solve_r2(A, grid_n=cfg.grid_n)
        except ScanFailure as exc:
            report.failures.append((A, str(exc)))
            continue
        report.solved += 1

        flags = PropFlags(
            classification=classification,
            uniqueness_guarantee=uniqueness_guarantee(A),
            bounds=bounds,
        )
        match = recognize(sol.c, tol=cfg.tolerance, max_st=cfg.max_st,
                          max_n=cfg.max_n, max_den=cfg.max_den)
        suspect = False
        if not match.empty and match.residual > 1e-9:
            # near-miss: re-solve on a much finer grid before accepting
            suspect = True
            sol = solve_r2(A, grid_n=20 * cfg.grid_n, tol=1e-15)
            match = recognize(sol.c, tol=cfg.tolerance, max_st=cfg.max_st,
                              max_n=cfg.max_n, max_den=cfg.max_den)

        cand = Candidate(A=A, c=sol.c, matches=match, solution=sol,
                         prop_flags=flags, suspect=suspect)
        if sol.multiplicity > 1 and cfg.require_uniqueness:
            report.nonunique.append(cand)
        elif not match.empty:
            report.admissible.append(cand)

    return report


def dedupe_by_duality(cands: list[Candidate]) -> list[Candidate]:
    """Collapse (A, dual(A)) pairs to the representative with c <= 1.

    The kept candidate is annotated with its partner matrix and the
    partner's c value; candidates without their dual in the list pass
    through unchanged.
    """
    by_entries = {cand.A.canonical()[0].entries: i for i, cand in enumerate(cands)}
    dropped = set()
    out = []
    for i, cand in enumerate(cands):
        if i in dropped:
            continue
        try:
            partner = dual(cand.A).canonical()[0]
        except SingularMatrixError:
            out.append(cand)
            continue
        j = by_entries.get(partner.entries)
        if j is None or j == i or j in dropped:
            out.append(cand)
            continue
        other = cands[j]
        keep, drop = (cand, other) if cand.c <= other.c else (other, cand)
        dropped.add(i)
        dropped.add(j)
        out.append(replace(keep, dual_partner=drop.A, dual_c=drop.c))
    return out


# ---------------------------------------------------------------------------
# reports


def _candidate_lines(cand: Candidate) -> list[str]:
    A = cand.A
    lines = [f"matrix {A.a} {A.b} {A.d}"]
    kinds = cand.matches.ranked()
    matched = "; ".join(f"{k}: {desc}" for k, desc in kinds) if kinds else "none"
    lines.append(f"  c = {cand.c:.12f}  matches {matched}")
    lines.append(
        f"  residual {cand.solution.residual:.3e}"
        f"  multiplicity {cand.solution.multiplicity}"
        f"  classification {cand.prop_flags.classification.relation}"
        f"  uniqueness_guarantee {cand.prop_flags.uniqueness_guarantee}"
    )
    if cand.prop_flags.bounds is not None:
        b = cand.prop_flags.bounds
        lines.append(f"  bounds [{b.lower:.9f}, {b.upper:.9f}] case {b.case_tag}")
    if cand.suspect:
        lines.append("  flag suspect (accepted after fine re-solve)")
    if cand.dual_partner is not None:
        p = cand.dual_partner
        lines.append(f"  dual {p.a} {p.b} {p.d}  c_dual = {cand.dual_c:.12f}")
    return lines


def report_text(report: SearchReport) -> str:
    """Human-readable search report, deterministic for a given config."""
    lines = [
        f"scanned {report.scanned}  pruned {report.pruned}  solved {report.solved}",
        f"admissible {len(report.admissible)}  nonunique {len(report.nonunique)}"
        f"  failures {len(report.failures)}",
        "",
    ]
    for cand in report.admissible:
        lines.extend(_candidate_lines(cand))
    if report.nonunique:
        lines.append("")
        lines.append("nonunique section (all interior solutions listed):")
        for cand in report.nonunique:
            lines.extend(_candidate_lines(cand))
            for x, y in cand.solution.interior:
                lines.append(f"    solution x = {x:.12f}  y = {y:.12f}")
    if report.failures:
        lines.append("")
        lines.append("failures:")
        for A, msg in report.failures:
            lines.append(f"  matrix {A.a} {A.b} {A.d}: {msg}")
    return "\n".join(lines) + "\n"


def _matrix_json(A: RationalSymmetricMatrix):
    return {"a": str(A.a), "b": str(A.b), "d": str(A.d)}


def _candidate_json(cand: Candidate, tol: float):
    # an empty match has residual infinity; JSON numbers cannot carry
    # that, so the schema encodes "no match" as -1.
    residual = cand.matches.residual if math.isfinite(cand.matches.residual) else -1.0
    out = {
        "matrix": _matrix_json(cand.A),
        "c": {"value": cand.c, "tol": max(cand.solution.residual, 1e-15)},
        "matches": {
            "minimal": list(cand.matches.minimal) if cand.matches.minimal else None,
            "parafermion": cand.matches.parafermion,
            "rational": (f"{cand.matches.rational[0]}/{cand.matches.rational[1]}"
                         if cand.matches.rational else None),
            "residual": {"value": residual, "tol": tol},
        },
        "multiplicity": cand.solution.multiplicity,
        "classification": cand.prop_flags.classification.relation,
        "uniqueness_guarantee": cand.prop_flags.uniqueness_guarantee,
        "suspect": cand.suspect,
    }
    if cand.prop_flags.bounds is not None:
        b = cand.prop_flags.bounds
        out["bounds"] = {
            "lower": {"value": b.lower, "tol": 1e-12},
            "upper": {"value": b.upper, "tol": 1e-12},
            "case": b.case_tag,
        }
    if cand.dual_partner is not None:
        out["dual"] = {
            "matrix": _matrix_json(cand.dual_partner),
            "c": {"value": cand.dual_c, "tol": 1e-12},
        }
    return out


def report_json(report: SearchReport, tol: float = 1e-9) -> str:
    """JSON search report matching the shipped output schema."""
    doc = {
        "scanned": report.scanned,
        "pruned": report.pruned,
        "solved": report.solved,
        "admissible": [_candidate_json(c, tol) for c in report.admissible],
        "nonunique": [
            {
                **_candidate_json(c, tol),
                "solutions": [
                    {"x": {"value": x, "tol": 1e-12}, "y": {"value": y, "tol": 1e-12}}
                    for x, y in c.solution.interior
                ],
            }
            for c in report.nonunique
        ],
        "failures": [
            {"matrix": _matrix_json(A), "message": msg} for A, msg in report.failures
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=False) + "\n"


# Example configurations; together they recover the full catalog of
# sporadic matrices plus the four tabulated one-parameter family points.
EXAMPLE_CONFIGS: dict[str, SearchConfig] = {
    "den4": SearchConfig(max_denominator=4, max_numerator=8),
    "den2": SearchConfig(max_denominator=2, max_numerator=8),
    "den6": SearchConfig(max_denominator=6, max_numerator=8),
    "diag_zero": SearchConfig(max_denominator=18, max_numerator=8, fix_d=Fraction(0)),
    "symmetric": SearchConfig(max_denominator=4, max_numerator=8, a_eq_d=True),
}
