"""Catalog of two-term Rogers dilogarithm identities with algebraic arguments.

Each catalog entry asserts sum_i coeff_i * L(arg_i) = target, where the
arguments are closed-form expressions over the named algebraic constants
of module algebraics (rho, lam, alpha, beta, gamma, delta, u_plus,
u_minus, mu, nu), rational numbers, and square roots.  A typical entry:

    identity heptagon_4_7
      term 1 1/lam^2
      term 1 1/(lam^2 - 1)^2
      target 4/7
      matrix 2 1 1
      source equivalent to the second Watson identity
    end

Grammar of argument expressions (integer literals only; '/' builds
rationals, '^' takes a nonnegative integer exponent):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | NAME | 'sqrt' '(' expr ')' | '(' expr ')'

The catalog file holds one record per identity: a header line
"identity NAME", indented field lines ("term COEFF EXPR",
"target P/Q", optional "matrix A B D", "source TEXT"), and a
closing "end".  Records are separated by single blank lines.  The
serializer reproduces this layout byte-identically, with expression
strings preserved exactly as read.

verify() evaluates an entry's residual |sum coeff L(arg) - target| in
binary64 (arguments resolved from isolating intervals refined to 1e-20)
or, for precision requests below 1e-13, in mpmath arbitrary precision.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import mpmath

from .algebraics import constant
from .dilog import rogers_L, rogers_L_mp
from .errors import CatalogError, DomainError
from .tba import RationalSymmetricMatrix, c_of, solve_r2

__all__ = [
    "IdentityEntry",
    "CrossCheckResult",
    "parse_expression",
    "evaluate_expression",
    "parse_catalog",
    "serialize_catalog",
    "load_catalog",
    "verify",
    "cross_check_tba",
]

# ---------------------------------------------------------------------------
# expression grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z_][a-z0-9_]*)|([()+\-*/^]))")


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos and not text[pos:].strip():
            break
        if m is None:
            raise CatalogError(f"bad character in expression {text!r} at offset {pos}")
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok is None:
            break
        out.append(tok)
        pos = m.end()
    if text[pos:].strip():
        raise CatalogError(f"bad character in expression {text!r} at offset {pos}")
    return out


class _Parser:
    def __init__(self, tokens: list[str], source: str):
        self.toks = tokens
        self.pos = 0
        self.source = source

    def peek(self) -> str | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expect: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise CatalogError(
                f"expected {expect or 'a token'} at position {self.pos} in {self.source!r}"
            )
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            node = (op, node, self.factor())
        return node

    def factor(self):
        if self.peek() == "-":
            self.take()
            return ("neg", self.factor())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise CatalogError(f"exponent must be a nonnegative integer in {self.source!r}")
            node = ("^", node, int(exp))
        return node

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise CatalogError(f"unexpected end of expression in {self.source!r}")
        if tok == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if tok.isdigit():
            self.take()
            return ("num", Fraction(int(tok)))
        if tok == "sqrt":
            self.take()
            self.take("(")
            node = self.expr()
            self.take(")")
            return ("sqrt", node)
        if re.fullmatch(r"[a-z_][a-z0-9_]*", tok):
            self.take()
            return ("const", tok)
        raise CatalogError(f"unexpected token {tok!r} in {self.source!r}")


def parse_expression(text: str):
    """Parse an argument expression into an AST of nested tuples."""
    p = _Parser(_tokenize(text), text)
    node = p.expr()
    if p.peek() is not None:
        raise CatalogError(f"trailing tokens after expression in {text!r}")
    return node


def evaluate_expression(node, mode: str = "float", dps: int = 50):
    """Evaluate an AST in binary64 (mode="float") or mpmath (mode="mp").

    Constants resolve through module algebraics: isolating intervals
    are refined to width 1e-20 (float) or 10^-(dps+5) (mp) first.
    """
    if mode == "float":
        def leaf_num(fr):  return float(fr)
        def leaf_const(nm): return constant(nm).to_float()
        def do_sqrt(v):
            if v < 0:
                raise DomainError(f"sqrt of negative value {v}")
            return math.sqrt(v)
    elif mode == "mp":
        def leaf_num(fr):  return mpmath.mpf(fr.numerator) / fr.denominator
        def leaf_const(nm): return constant(nm).to_mpf(dps)
        def do_sqrt(v):
            if v < 0:
                raise DomainError(f"sqrt of negative value {v}")
            return mpmath.sqrt(v)
    else:
        raise ValueError(f"mode must be 'float' or 'mp', got {mode!r}")

    def ev(n):
        kind = n[0]
        if kind == "num":
            return leaf_num(n[1])
        if kind == "const":
            try:
                return leaf_const(n[1])
            except DomainError as exc:
                raise CatalogError(f"unresolvable constant {n[1]!r}") from exc
        if kind == "neg":
            return -ev(n[1])
        if kind == "sqrt":
            return do_sqrt(ev(n[1]))
        if kind == "^":
            return ev(n[1]) ** n[2]
        a, b = ev(n[1]), ev(n[2])
        if kind == "+":
            return a + b
        if kind == "-":
            return a - b
        if kind == "*":
            return a * b
        if kind == "/":
            return a / b
        raise CatalogError(f"unknown AST node {n!r}")

    if mode == "mp":
        with mpmath.workdps(dps):
            return ev(node)
    return ev(node)


# ---------------------------------------------------------------------------
# catalog records

@dataclass(frozen=True)
class IdentityEntry:
    """One dilogarithm identity: sum coeff * L(expr) = target.

    terms holds (coefficient, raw expression string) pairs; the raw
    strings are preserved for byte-identical serialization.  matrix,
    when present, is the TBA system whose principal solution has the
    terms' arguments as coordinates and target as its c value.
    """

    name: str
    terms: tuple[tuple[Fraction, str], ...]
    target: Fraction
    matrix: RationalSymmetricMatrix | None
    source: str

    def arguments(self, mode: str = "float", dps: int = 50) -> list:
        return [evaluate_expression(parse_expression(e), mode, dps) for _, e in self.terms]


def parse_catalog(text: str) -> list[IdentityEntry]:
    """Parse catalog text into entries; see the module docstring for layout."""
    entries: list[IdentityEntry] = []
    name = None
    terms: list[tuple[Fraction, str]] = []
    target = matrix = source = None
    seen: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("identity "):
            if name is not None:
                raise CatalogError(f"line {lineno}: record {name!r} not closed before new record")
            name = line[len("identity "):].strip()
            if not name:
                raise CatalogError(f"line {lineno}: empty identity name")
            if name in seen:
                raise CatalogError(f"line {lineno}: duplicate identity name {name!r}")
            seen.add(name)
            terms, target, matrix, source = [], None, None, None
        elif name is None:
            raise CatalogError(f"line {lineno}: field outside any record: {line!r}")
        elif line == "end":
            if not terms or target is None or source is None:
                raise CatalogError(f"record {name!r} is missing terms, target, or source")
            entries.append(IdentityEntry(
                name=name, terms=tuple(terms), target=target, matrix=matrix, source=source,
            ))
            name = None
        elif line.startswith("term "):
            rest = line[len("term "):]
            coeff_str, _, expr = rest.partition(" ")
            expr = expr.strip()
            if not expr:
                raise CatalogError(f"line {lineno}: term needs a coefficient and an expression")
            try:
                coeff = Fraction(coeff_str)
            except ValueError as exc:
                raise CatalogError(f"line {lineno}: bad coefficient {coeff_str!r}") from exc
            parse_expression(expr)
            terms.append((coeff, expr))
        elif line.startswith("target "):
            try:
                target = Fraction(line[len("target "):].strip())
            except ValueError as exc:
                raise CatalogError(f"line {lineno}: bad target in {line!r}") from exc
        elif line.startswith("matrix "):
            parts = line[len("matrix "):].split()
            if len(parts) != 3:
                raise CatalogError(f"line {lineno}: matrix needs exactly three entries")
            try:
                a, b, d = (Fraction(p) for p in parts)
            except ValueError as exc:
                raise CatalogError(f"line {lineno}: bad matrix entry in {line!r}") from exc
            matrix = RationalSymmetricMatrix(a, b, d)
        elif line.startswith("source "):
            source = line[len("source "):].strip()
        else:
            raise CatalogError(f"line {lineno}: unrecognized field {line!r}")

    if name is not None:
        raise CatalogError(f"record {name!r} has no closing end")
    return entries


def serialize_catalog(entries: list[IdentityEntry]) -> str:
    """Canonical text for entries; parse_catalog round-trips it exactly."""
    blocks = []
    for e in entries:
        lines = [f"identity {e.name}"]
        for coeff, expr in e.terms:
            lines.append(f"  term {coeff} {expr}")
        lines.append(f"  target {e.target}")
        if e.matrix is not None:
            lines.append(f"  matrix {e.matrix.a} {e.matrix.b} {e.matrix.d}")
        lines.append(f"  source {e.source}")
        lines.append("end")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def load_catalog() -> list[IdentityEntry]:
    """The packaged catalog, parsed."""
    text = resources.files("dilogtba").joinpath("data/identities.txt").read_text("utf-8")
    return parse_catalog(text)


# ---------------------------------------------------------------------------
# verification

def _check_unit_interval(name: str, value: float) -> float:
    if -1e-12 <= value <= 1.0 + 1e-12:
        return min(1.0, max(0.0, value))
    raise DomainError(f"argument of entry {name!r} evaluates to {value}, outside [0,1]")


def verify(entry: IdentityEntry, precision: float = 1e-12) -> float:
    """Residual |sum coeff * L(arg) - target| of one catalog entry.

    precision >= 1e-13 uses binary64 throughout (arguments accurate to
    about 1e-16, L evaluated by series and reflection).  Smaller
    precision switches to mpmath with enough working digits to make the
    requested residual resolvable.
    """
    if precision <= 0:
        raise ValueError(f"precision must be positive, got {precision}")
    if precision >= 1e-13:
        args = entry.arguments("float")
        total = math.fsum(
            float(coeff) * rogers_L(_check_unit_interval(entry.name, arg))
            for (coeff, _), arg in zip(entry.terms, args)
        )
        return abs(total - float(entry.target))

    dps = max(30, int(math.ceil(-math.log10(precision))) + 15)
    args = entry.arguments("mp", dps)
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for (coeff, _), arg in zip(entry.terms, args):
            if not (-mpmath.mpf(10) ** (-dps + 5) <= arg <= 1 + mpmath.mpf(10) ** (-dps + 5)):
                raise DomainError(
                    f"argument of entry {entry.name!r} evaluates to {arg}, outside [0,1]"
                )
            arg = min(mpmath.mpf(1), max(mpmath.mpf(0), arg))
            total += mpmath.mpf(coeff.numerator) / coeff.denominator * rogers_L_mp(arg, dps=dps)
        target = mpmath.mpf(entry.target.numerator) / entry.target.denominator
        return float(abs(total - target))


@dataclass(frozen=True)
class CrossCheckResult:
    """Agreement between a catalog entry and its TBA system.

    c_residual is |c_of(matrix) - target|; coordinate_distance is the
    largest gap between the solved (x, y) and the entry's arguments
    after sorting both pairs; total is their sum.
    """

    c_residual: float
    coordinate_distance: float

    @property
    def total(self) -> float:
        return self.c_residual + self.coordinate_distance


def cross_check_tba(entry: IdentityEntry, A: RationalSymmetricMatrix | None = None) -> CrossCheckResult:
    """Check an entry against the TBA solution of its matrix.

    Uses entry.matrix when A is not given.  Only meaningful for entries
    whose terms are unit-coefficient dilogarithms of the solution
    coordinates.
    """
    if A is None:
        A = entry.matrix
    if A is None:
        raise CatalogError(f"entry {entry.name!r} carries no matrix to cross-check")
    sol = solve_r2(A)
    c_res = abs(sol.c - float(entry.target))
    args = sorted(entry.arguments("float"))
    coords = sorted((sol.x, sol.y))
    if len(args) != len(coords):
        raise CatalogError(
            f"entry {entry.name!r} has {len(args)} terms; expected {len(coords)} coordinates"
        )
    dist = max(abs(a - c) for a, c in zip(args, coords))
    return CrossCheckResult(c_residual=c_res, coordinate_distance=dist)
