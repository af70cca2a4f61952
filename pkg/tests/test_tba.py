"""Tests for the TBA fixed-point solvers.

Coordinate expectations come from the closed algebraic forms (checked
independently in test_algebraics); an in-test damped fixed-point
iteration serves as an independent oracle for the scan-plus-bisection
solver.
"""

import math
from fractions import Fraction as F

import numpy as np
import pytest

from dilogtba import (
    DomainError,
    INFINITY,
    RangeViolation,
    RationalSymmetricMatrix as M,
    ScanFailure,
    c_of,
    check_range,
    constant,
    delta_fn,
    kappa,
    reduced_f,
    rogers_L,
    solve_r1,
    solve_r2,
)

RHO = (math.sqrt(5.0) - 1.0) / 2.0


# ---------------------------------------------------------------------------
# matrix type


def test_matrix_exactness():
    A = M(F(1, 2), F(-1, 3), F(2))
    assert A.a == F(1, 2) and A.b == F(-1, 3) and A.d == F(2)
    assert A.D == F(1, 2) * 2 - F(1, 9)
    assert A.entries == (F(1, 2), F(-1, 3), F(2))
    assert A.max_denominator() == 3
    with pytest.raises(DomainError):
        M(0.5, F(1), F(1))
    with pytest.raises(DomainError):
        M(F(1), True, F(1))


def test_matrix_helpers():
    A = M(3, 1, 2)
    assert A.scaled(F(1, 2)).entries == (F(3, 2), F(1, 2), F(1))
    assert A.swapped().entries == (F(2), F(1), F(3))
    B, swapped = M(1, 5, 4).canonical()
    assert swapped and B.entries == (F(4), F(5), F(1))
    B2, swapped2 = M(4, 5, 1).canonical()
    assert not swapped2 and B2.entries == (F(4), F(5), F(1))
    assert str(M(2, F(5, 2), 1)) == "(2 5/2; 5/2 1)"


def test_check_range():
    assert check_range(M(2, 1, 1))
    assert check_range(M(1, -1, 1))          # b = -min(a, d) allowed
    assert check_range(M(0, 0, 0))
    assert not check_range(M(-1, 0, 1))      # negative diagonal
    assert not check_range(M(4, F(-3, 2), 1))  # b < -min(a, d)
    assert not check_range(M(1, F(-9, 8), 2))


# ---------------------------------------------------------------------------
# kappa / delta


def test_kappa_special_values():
    assert kappa(0) == 1.0
    assert kappa(F(1, 2)) == 0.5
    assert kappa(INFINITY) == 0.0
    assert abs(kappa(1) - (1.0 - RHO)) <= 1e-15
    # kappa(1/4) solves xi^2 = 1 - xi, i.e. the golden constant
    assert abs(kappa(F(1, 4)) - RHO) <= 1e-15


def test_kappa_domain():
    with pytest.raises(DomainError):
        kappa(F(-1, 2))
    with pytest.raises(DomainError):
        kappa(0.3)  # inexact float rejected
    with pytest.raises(DomainError):
        kappa(float("nan"))
    with pytest.raises(DomainError):
        kappa(None)


def test_kappa_self_consistency():
    # xi = (1-xi)^(2t) to 1e-12 across [0, 10]
    worst = 0.0
    for k in range(0, 401):
        t = F(k, 40)
        x = kappa(t)
        worst = max(worst, abs(x - (1.0 - x) ** (2.0 * float(t))))
    assert worst <= 1e-12


def test_kappa_monotone_decreasing():
    vals = [kappa(F(k, 8)) for k in range(0, 81)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_delta_values():
    assert delta_fn(0) == 1.0
    assert abs(delta_fn(1) - 0.4) <= 1e-15
    assert abs(delta_fn(F(1, 2)) - 0.5) <= 1e-15
    assert abs(delta_fn(F(1, 4)) - 0.6) <= 1e-15
    assert delta_fn(INFINITY) == 0.0


# ---------------------------------------------------------------------------
# r = 1


def test_solve_r1_spectrum():
    table = [
        (INFINITY, 0.0),
        (1, 0.4),
        (F(1, 2), 0.5),
        (F(1, 4), 0.6),
        (0, 1.0),
    ]
    for a, want in table:
        sol = solve_r1(a)
        assert abs(sol.c - want) <= 1e-12
        assert sol.y is None
        assert sol.multiplicity == 1
        assert sol.residual <= 1e-12


# ---------------------------------------------------------------------------
# r = 2 solver


def test_solve_r2_heptagonal():
    # x = 1/(lam^2-1)^2, y = 1/lam^2 with lam the positive heptagonal root
    lam = float(constant("lam"))
    sol = solve_r2(M(2, 1, 1))
    assert abs(sol.x - 1.0 / (lam * lam - 1.0) ** 2) <= 1e-12
    assert abs(sol.y - 1.0 / (lam * lam)) <= 1e-12
    assert abs(sol.c - 4.0 / 7.0) <= 1e-13
    assert sol.residual <= 1e-12
    assert sol.multiplicity == 1
    assert not sol.boundary_flag
    assert sol.interior == ((sol.x, sol.y),)


def test_reduced_equation_root():
    lam = float(constant("lam"))
    assert abs(reduced_f(M(2, 1, 1), 1.0 / (lam * lam)) - 1.0) <= 1e-12


def test_solve_r2_decoupled():
    # b = 0 splits into two rank-1 systems
    sol = solve_r2(M(1, 0, F(1, 2)))
    assert abs(sol.x - kappa(1)) <= 1e-15
    assert abs(sol.y - 0.5) <= 1e-15
    assert abs(sol.c - 0.9) <= 1e-13


def test_solve_r2_orientation():
    # (a, d) swap exchanges the coordinates and keeps c
    s1 = solve_r2(M(2, 1, 1))
    s2 = solve_r2(M(1, 1, 2))
    assert abs(s1.x - s2.y) <= 1e-12
    assert abs(s1.y - s2.x) <= 1e-12
    assert abs(s1.c - s2.c) <= 1e-13


def test_boundary_with_interior():
    # d = 0, 0 < b < 1/2: one interior solution plus the boundary pair
    sol = solve_r2(M(F(1, 4), F(1, 4), 0))
    assert sol.boundary_flag
    assert not sol.principal_is_boundary
    assert sol.multiplicity == 1
    assert (0.0, 1.0) in sol.boundary
    alpha = float(constant("alpha"))
    assert abs(sol.y - alpha) <= 1e-12
    assert abs(sol.x - (1.0 - alpha * alpha)) <= 1e-12
    assert abs(sol.c - 8.0 / 7.0) <= 1e-12


def test_boundary_only():
    # d = 0, b >= 1/2: the boundary pair is the only solution
    sol = solve_r2(M(F(1, 2), F(1, 2), 0))
    assert sol.principal_is_boundary
    assert not sol.boundary_flag
    assert sol.multiplicity == 1
    assert (sol.x, sol.y) == (0.0, 1.0)
    assert abs(sol.c - 1.0) <= 1e-15
    mirror = solve_r2(M(0, F(1, 2), F(1, 2)))
    assert (mirror.x, mirror.y) == (1.0, 0.0)
    assert abs(mirror.c - 1.0) <= 1e-15


def test_multiplicity_three():
    # symmetric a + b = 1 family member deep in the non-unique region
    sol = solve_r2(M(F(1, 20), F(19, 20), F(1, 20)))
    assert sol.multiplicity == 3
    assert len(sol.interior) == 3
    # principal solution is the one with smallest y
    assert sol.y == min(y for _, y in sol.interior)
    xs = sorted(x for x, _ in sol.interior)
    ys = sorted(y for _, y in sol.interior)
    assert all(abs(a - b) <= 1e-9 for a, b in zip(xs, ys))  # swap symmetry


def test_no_solution():
    # b = -a with a = d forces xy = 1, impossible inside the square
    with pytest.raises(ScanFailure):
        solve_r2(M(1, -1, 1))


def test_solution_continuum():
    with pytest.raises(ScanFailure):
        solve_r2(M(0, F(1, 2), 0))


def test_range_enforcement():
    A = M(4, F(-3, 2), 1)
    with pytest.raises(RangeViolation):
        solve_r2(A)
    sol = solve_r2(A, enforce_range=False)
    # this member of the x + y = 1 family has c exactly 1
    assert abs(sol.x + sol.y - 1.0) <= 1e-10
    assert abs(sol.c - 1.0) <= 1e-10


def test_c_of():
    assert abs(c_of(M(2, 1, 1)) - 4.0 / 7.0) <= 1e-13
    with pytest.raises(RangeViolation):
        c_of(M(4, F(-3, 2), 1))
    assert abs(c_of(M(4, F(-3, 2), 1), enforce_range=False) - 1.0) <= 1e-10


def test_grid_n_validation():
    with pytest.raises(DomainError):
        solve_r2(M(2, 1, 1), grid_n=10)


def test_residuals_both_equations():
    # residual covers both fixed-point equations, not just the reduced one
    for entries in [(2, 1, 1), (4, F(5, 2), 2), (F(5, 4), 1, 1)]:
        sol = solve_r2(M(*entries))
        a, b, d = (float(v) for v in entries)
        r1 = abs(sol.x - (1 - sol.x) ** (2 * a) * (1 - sol.y) ** (2 * b))
        r2 = abs(sol.y - (1 - sol.x) ** (2 * b) * (1 - sol.y) ** (2 * d))
        assert max(r1, r2) <= max(sol.residual, 1e-15) * 1.5 + 1e-15


# ---------------------------------------------------------------------------
# independent oracle: damped fixed-point iteration


def _damped_orbit(A, starts, damping=0.8, tol=1e-13, max_iter=60000):
    a, b, d = float(A.a), float(A.b), float(A.d)
    x = starts[:, 0].copy()
    y = starts[:, 1].copy()
    lam = 1.0 - damping
    for _ in range(max_iter):
        nx = (1.0 - x) ** (2 * a) * (1.0 - y) ** (2 * b)
        ny = (1.0 - x) ** (2 * b) * (1.0 - y) ** (2 * d)
        step = max(np.abs(nx - x).max(), np.abs(ny - y).max())
        x += lam * (nx - x)
        y += lam * (ny - y)
        if step < tol:
            break
    return x, y


def test_damped_iteration_oracle():
    # 40 matrices x 10 starts here; the full 200 x 20 run is in the
    # acceptance suite.  b >= 0 keeps the iteration a self-map of the
    # open unit square; positive diagonal avoids boundary attractors.
    rng = np.random.default_rng(99)
    tried = 0
    worst = 0.0
    while tried < 40:
        den = int(rng.integers(1, 13))
        a = F(int(rng.integers(1, 4 * den + 1)), den)
        den2 = int(rng.integers(1, 13))
        d = F(int(rng.integers(1, 4 * den2 + 1)), den2)
        if a < d:
            a, d = d, a
        den3 = int(rng.integers(1, 13))
        b = F(int(rng.integers(0, 4 * den3 + 1)), den3)
        sol = solve_r2(M(a, b, d))
        if sol.multiplicity != 1 or sol.principal_is_boundary:
            continue
        tried += 1
        starts = rng.uniform(0.02, 0.98, size=(10, 2))
        X, Y = _damped_orbit(M(a, b, d), starts)
        worst = max(worst, np.abs(X - sol.x).max(), np.abs(Y - sol.y).max())
    assert worst <= 1e-8


def test_c_additive_under_decoupling():
    # for b = 0, c is the sum of the two rank-1 values
    for a, d in [(1, F(1, 4)), (F(1, 2), F(1, 2)), (3, 1)]:
        lhs = c_of(M(a, 0, d))
        rhs = solve_r1(a).c + solve_r1(d).c
        assert abs(lhs - rhs) <= 1e-13
