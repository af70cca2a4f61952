"""Fixed points of the r=1 and r=2 TBA equations and their dilogarithm sums.

The r=2 system for a symmetric rational matrix A = ((a, b), (b, d)) is

    x = (1-x)^(2a) (1-y)^(2b),        y = (1-x)^(2b) (1-y)^(2d),

with solutions sought in the unit square.  The dilogarithm sum
c[A] = L(x) + L(y) at the principal solution is the quantity of
interest.  The r=1 case is the single equation x = (1-x)^(2a), whose
solution defines kappa(a); its dilogarithm value is delta_fn(a).

For b != 0, eliminating x gives the one-variable equation f(y) = 1 with

    f(y) = y^(1/(2b)) (1-y)^(-d/b) + y^(a/b) (1-y)^(-2D/b),   D = ad - b^2,

where the first term equals 1-x and the second equals x.  The solver
scans f - 1 for sign changes on a dense grid of (0,1) and bisects each
bracket, which also counts the solution multiplicity.  For b = 0 the
system decouples into two r=1 problems.  Boundary fixed points (x,y) in
{(0,1), (1,0)} exist exactly when d = 0 (resp. a = 0) with b > 0; they
are reported separately from interior solutions and are only promoted
to principal when no interior solution exists.

Entries are exact Fractions; a diagonal r=1 entry may also be the
frozen value INFINITY, meaning the variable is pinned at x = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .dilog import rogers_L
from .errors import DomainError, RangeViolation, ScanFailure

INFINITY = math.inf

_HALF = Fraction(1, 2)


def _as_fraction(v, what: str = "entry") -> Fraction:
    """Exact coercion; floats are rejected to keep entries exact."""
    if isinstance(v, bool) or isinstance(v, float):
        raise DomainError(f"{what} must be an exact rational (int, Fraction, or string), got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, TypeError) as exc:
        raise DomainError(f"cannot parse {what} {v!r} as a rational") from exc


@dataclass(frozen=True)
class RationalSymmetricMatrix:
    """Symmetric 2x2 matrix ((a, b), (b, d)) with exact rational entries."""

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a, "a"))
        object.__setattr__(self, "b", _as_fraction(self.b, "b"))
        object.__setattr__(self, "d", _as_fraction(self.d, "d"))

    @property
    def D(self) -> Fraction:
        """Determinant ad - b^2."""
        return self.a * self.d - self.b * self.b

    @property
    def entries(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.d)

    def scaled(self, s) -> "RationalSymmetricMatrix":
        s = _as_fraction(s, "scale")
        return RationalSymmetricMatrix(self.a * s, self.b * s, self.d * s)

    def swapped(self) -> "RationalSymmetricMatrix":
        """The matrix with a and d exchanged (relabels x <-> y)."""
        return RationalSymmetricMatrix(self.d, self.b, self.a)

    def canonical(self) -> tuple["RationalSymmetricMatrix", bool]:
        """Representative with a >= d, plus whether a swap happened."""
        if self.a < self.d:
            return self.swapped(), True
        return self, False

    def max_denominator(self) -> int:
        return max(self.a.denominator, self.b.denominator, self.d.denominator)

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.b} {self.d})"


def check_range(A: RationalSymmetricMatrix) -> bool:
    """Entry conditions a, d >= 0 and b >= -min(a, d), checked exactly.

    These are sufficient for the r=2 system to have a solution in the
    unit square; with b < 0 they also force D >= 0.
    """
    return A.a >= 0 and A.d >= 0 and A.b >= -min(A.a, A.d)


@dataclass(frozen=True)
class TbaSolution:
    """A solved TBA fixed point.

    x, y          principal solution (y is None for r=1)
    c             L(x) + L(y) (or L(x) for r=1) at the principal solution
    residual      max absolute defect of the defining equations there
    multiplicity  number of distinct interior solutions found by the scan
    boundary_flag True when the extra boundary solution (x,y)=(0,1)
                  coexists with an interior one (d = 0, 0 < b < 1/2)
    interior      all interior solutions, ascending in y
    boundary      boundary solutions present ((0,1) and/or (1,0))
    principal_is_boundary  True when no interior solution exists and a
                  boundary one was promoted to principal
    """

    x: float
    y: float | None
    c: float
    residual: float
    multiplicity: int
    boundary_flag: bool = False
    interior: tuple[tuple[float, float], ...] = field(default=())
    boundary: tuple[tuple[float, float], ...] = field(default=())
    principal_is_boundary: bool = False


# ---------------------------------------------------------------------------
# kappa and delta


@lru_cache(maxsize=None)
def _kappa_cached(t: Fraction | float) -> float:
    tf = float(t)
    # g(xi) = ln xi - 2t ln(1-xi) is strictly increasing with g(0+) = -inf
    # and g(1-) = +inf, so plain bisection is safe.
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g = math.log(mid) - 2.0 * tf * math.log1p(-mid)
        if g < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def kappa(t) -> float:
    """The unique root of xi = (1-xi)^(2t) on [0,1]; decreasing in t."""
    if t is None:
        raise DomainError("t must be a nonnegative rational or INFINITY")
    if isinstance(t, float):
        if math.isinf(t) and t > 0:
            return 0.0
        if math.isnan(t):
            raise DomainError("t must not be NaN")
        raise DomainError("t must be an exact rational (int, Fraction, or string) or INFINITY")
    t = _as_fraction(t, "t")
    if t < 0:
        raise DomainError(f"kappa requires t >= 0, got {t}")
    if t == 0:
        return 1.0
    if t == _HALF:
        return 0.5
    return _kappa_cached(t)


def delta_fn(t) -> float:
    """delta(t) = L(kappa(t)); delta(0) = 1, strictly decreasing."""
    return rogers_L(kappa(t))


# ---------------------------------------------------------------------------
# r = 1


def solve_r1(a) -> TbaSolution:
    """Solve x = (1-x)^(2a); a >= 0 rational or the frozen INFINITY."""
    if isinstance(a, float) and math.isinf(a) and a > 0:
        return TbaSolution(x=0.0, y=None, c=0.0, residual=0.0, multiplicity=1)
    x = kappa(a)
    af = float(_as_fraction(a))
    if x in (0.0, 1.0):
        residual = 0.0
    else:
        residual = abs(x - (1.0 - x) ** (2.0 * af))
    return TbaSolution(x=x, y=None, c=rogers_L(x), residual=residual, multiplicity=1)


# ---------------------------------------------------------------------------
# r = 2


def _exponents(A: RationalSymmetricMatrix) -> tuple[float, float, float, float]:
    b = A.b
    return (
        float(1 / (2 * b)),
        float(-A.d / b),
        float(A.a / b),
        float(-2 * A.D / b),
    )


def reduced_f(A: RationalSymmetricMatrix, y: float) -> float:
    """f(y) = y^(1/(2b)) (1-y)^(-d/b) + y^(a/b) (1-y)^(-2D/b).

    Interior TBA solutions correspond to f(y) = 1; the first term is
    then 1-x and the second is x.  Requires b != 0 and y in (0,1).
    """
    if A.b == 0:
        raise DomainError("reduced equation needs b != 0 (b = 0 decouples into r=1 problems)")
    if not (0.0 < y < 1.0):
        raise DomainError(f"reduced_f is defined on the open interval (0,1), got y={y}")
    p1, p2, p3, p4 = _exponents(A)
    ly, l1y = math.log(y), math.log1p(-y)
    return math.exp(p1 * ly + p2 * l1y) + math.exp(p3 * ly + p4 * l1y)


_GRID_CACHE: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _grid_logs(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    got = _GRID_CACHE.get(n)
    if got is None:
        y = np.arange(1, n + 1, dtype=np.float64) / (n + 1)
        got = (y, np.log(y), np.log1p(-y))
        if len(_GRID_CACHE) > 8:
            _GRID_CACHE.clear()
        _GRID_CACHE[n] = got
    return got


def _residuals(A: RationalSymmetricMatrix, x: float, y: float) -> float:
    a, b, d = float(A.a), float(A.b), float(A.d)

    def powf(base: float, e: float) -> float:
        if base == 0.0:
            return 1.0 if e == 0.0 else 0.0
        return base ** e

    r1 = abs(x - powf(1.0 - x, 2.0 * a) * powf(1.0 - y, 2.0 * b))
    r2 = abs(y - powf(1.0 - x, 2.0 * b) * powf(1.0 - y, 2.0 * d))
    return max(r1, r2)


def _bisect_root(A: RationalSymmetricMatrix, lo: float, hi: float, glo: float, tol: float) -> float:
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo < tol:
            break
        g = reduced_f(A, mid) - 1.0
        if g == 0.0:
            return mid
        if (g < 0.0) == (glo < 0.0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_r2(
    A: RationalSymmetricMatrix,
    grid_n: int = 100_000,
    tol: float = 1e-14,
    enforce_range: bool = True,
) -> TbaSolution:
    """Solve the r=2 system, reporting all interior solutions found.

    The scan evaluates the reduced equation on a uniform grid of grid_n
    points of (0,1) and bisects every sign change to width tol; x is
    recovered from the second reduced term.  The principal solution is
    the interior one with smallest y; boundary solutions are listed
    separately and promoted to principal only when nothing interior
    exists.  Raises RangeViolation outside the admissible entry range
    and ScanFailure when no solution is found (or when the solution set
    is a continuum, which happens exactly for a = d = 0, b = 1/2).

    The entry range is sufficient but not necessary for a solution:
    some continuous families (for example b = 1/2 - sqrt(ad) with large
    ad) leave it yet still solve.  Pass enforce_range=False to scan
    such matrices anyway; outside the range nothing is guaranteed and
    ScanFailure simply means the grid found no sign change.
    """
    if grid_n < 1001:
        raise DomainError(f"grid_n must be at least 1001 for reliable root separation, got {grid_n}")
    if enforce_range and not check_range(A):
        raise RangeViolation(f"matrix {A} violates the entry range (a,d >= 0, b >= -min(a,d))")
    a, b, d = A.a, A.b, A.d

    if b == 0:
        x, y = kappa(a), kappa(d)
        sol = (x, y)
        return TbaSolution(
            x=x, y=y, c=rogers_L(x) + rogers_L(y),
            residual=_residuals(A, x, y), multiplicity=1,
            interior=(sol,),
        )

    if a == 0 and d == 0 and b == _HALF:
        raise ScanFailure(
            "a = d = 0, b = 1/2 has a one-parameter continuum of solutions x + y = 1"
        )

    # boundary fixed points
    boundary: list[tuple[float, float]] = []
    if d == 0 and b > 0:
        boundary.append((0.0, 1.0))
    if a == 0 and b > 0:
        boundary.append((1.0, 0.0))

    # dense scan of f(y) - 1 for sign changes
    p1, p2, p3, p4 = _exponents(A)
    y, ly, l1y = _grid_logs(grid_n)
    with np.errstate(over="ignore", under="ignore"):
        g = np.exp(p1 * ly + p2 * l1y) + np.exp(p3 * ly + p4 * l1y) - 1.0

    roots: list[float] = []
    sign = np.sign(g)
    hits = np.nonzero(sign == 0.0)[0]
    for k in hits:
        roots.append(float(y[k]))
    flips = np.nonzero(sign[:-1] * sign[1:] < 0.0)[0]
    for k in flips:
        roots.append(_bisect_root(A, float(y[k]), float(y[k + 1]), float(g[k]), tol))
    roots.sort()

    interior: list[tuple[float, float]] = []
    for yr in roots:
        if interior and abs(yr - interior[-1][1]) < 1e-10:
            continue
        lyr, l1yr = math.log(yr), math.log1p(-yr)
        xr = math.exp(p3 * lyr + p4 * l1yr)
        if 0.0 < xr < 1.0:
            interior.append((xr, yr))

    boundary_flag = (d == 0 and 0 < b < _HALF)

    if interior:
        px, py = interior[0]
        return TbaSolution(
            x=px, y=py, c=rogers_L(px) + rogers_L(py),
            residual=_residuals(A, px, py),
            multiplicity=len(interior), boundary_flag=boundary_flag,
            interior=tuple(interior), boundary=tuple(boundary),
        )
    if boundary:
        px, py = boundary[0]
        return TbaSolution(
            x=px, y=py, c=rogers_L(px) + rogers_L(py),
            residual=_residuals(A, px, py),
            multiplicity=1, boundary_flag=False,
            interior=(), boundary=tuple(boundary),
            principal_is_boundary=True,
        )
    raise ScanFailure(f"no solution found for {A} on a grid of {grid_n} points")


def c_of(A, grid_n: int = 100_000, enforce_range: bool = True) -> float:
    """Dilogarithm sum at the principal solution.

    Accepts a RationalSymmetricMatrix (r=2) or a single rational or
    INFINITY (r=1).
    """
    if isinstance(A, RationalSymmetricMatrix):
        return solve_r2(A, grid_n=grid_n, enforce_range=enforce_range).c
    return solve_r1(A).c
