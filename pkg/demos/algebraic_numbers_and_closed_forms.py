"""
Exact algebraic numbers and closed-form solutions
=================================================

The solver works in floating point, but the special solutions it finds
are algebraic numbers: roots of explicit integer polynomials.  The
algebraics module represents such a number exactly as a polynomial
plus an isolating rational interval, using Sturm sequences to count
and separate real roots, and bisection to refine them to any width.

This script isolates the roots of a few polynomials, prints the named
constants that appear in closed-form solutions, and cross-checks one
solved system against its closed form.
"""

from fractions import Fraction

from dilogtba import (
    CONSTANTS,
    IntegerPolynomial,
    RationalSymmetricMatrix,
    constant,
    count_real_roots,
    isolate_real_roots,
    solve_r2,
)

F = Fraction
M = RationalSymmetricMatrix

# Root isolation.  Coefficients are constant-first: x^2 + x - 1 is
# (-1, 1, 1).  The golden-ratio polynomial has two real roots; Sturm
# counting finds both, and each comes with a disjoint rational
# interval.
poly = IntegerPolynomial((-1, 1, 1))
print(f"polynomial {poly}")
print(f"  real roots: {count_real_roots(poly)}")
for root in isolate_real_roots(poly):
    lo, hi = root.refine(F(1, 10**12))
    print(f"  root in [{float(lo):.15f}, {float(hi):.15f}]  ~ {root.to_float()!r}")

# A quartic with four real roots, isolated the same way.
quartic = IntegerPolynomial((1, 0, -5, 0, 1))
print(f"polynomial {quartic}")
for root in isolate_real_roots(quartic):
    print(f"  root ~ {root.to_float():+.15f}")

# The named constants.  Each is a root of a small integer polynomial,
# pinned down by an isolating interval; together they express every
# closed-form solution of the sporadic systems.
print()
print("named constants")
print(f"{'name':>8}  {'value':>20}  polynomial")
for name in sorted(CONSTANTS):
    a = constant(name)
    print(f"{name:>8}  {a.to_float():>20.15f}  {a.poly}")

# Closed-form cross-check.  For the system (5/4 1; 1 1) the solution
# is x = 1 - delta^2, y = (1 + delta)^(-2) where delta is the root of
# t^4 + 2t^3 - t - 1 in (0, 1).  The solver never sees delta, so the
# agreement below is a genuine consistency test.
delta = constant("delta").to_float()
sol = solve_r2(M(F(5, 4), 1, 1))
x_closed = 1.0 - delta**2
y_closed = (1.0 + delta) ** -2
print()
print("closed form vs solver for (5/4 1; 1 1)")
print(f"  x: solver {sol.x:.15f}   closed {x_closed:.15f}   diff {abs(sol.x - x_closed):.1e}")
print(f"  y: solver {sol.y:.15f}   closed {y_closed:.15f}   diff {abs(sol.y - y_closed):.1e}")
