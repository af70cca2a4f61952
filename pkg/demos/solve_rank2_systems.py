"""
Solving the rank-2 fixed-point systems
======================================

For a rational symmetric matrix A = (a b; b d) the system

    x = (1-x)^(2a) (1-y)^(2b),   y = (1-x)^(2b) (1-y)^(2d)

has solutions in the unit square, and the dilogarithm sum
c[A] = L(x) + L(y) at the principal solution is, for special matrices,
a rational number from a conformal-field-theory spectrum.  This script
solves the nine sporadic systems with rational c, plus the
one-parameter family (a 1/2; 1/2 1/2) at its four rational points, and
shows what the recognizer makes of each value.
"""

from fractions import Fraction

from dilogtba import RationalSymmetricMatrix, recognize, solve_r2

F = Fraction
M = RationalSymmetricMatrix

# The nine sporadic matrices, with the rational c each one produces.
systems = [
    ("(2 1; 1 1)", M(2, 1, 1)),
    ("(1 1/2; 1/2 3/4)", M(1, F(1, 2), F(3, 4))),
    ("(5/4 1; 1 1)", M(F(5, 4), 1, 1)),
    ("(2 3/2; 3/2 3/2)", M(2, F(3, 2), F(3, 2))),
    ("(4 3/2; 3/2 1)", M(4, F(3, 2), 1)),
    ("(4 5/2; 5/2 2)", M(4, F(5, 2), 2)),
    ("(4/3 1/6; 1/6 1/3)", M(F(4, 3), F(1, 6), F(1, 3))),
    ("(1/4 1/4; 1/4 0)", M(F(1, 4), F(1, 4), 0)),
    ("(4/9 1/6; 1/6 0)", M(F(4, 9), F(1, 6), 0)),
]
for a in (F(0), F(1, 2), F(1), F(2)):
    systems.append((f"({a} 1/2; 1/2 1/2)", M(a, F(1, 2), F(1, 2))))

print(f"{'matrix':<22} {'x':>12} {'y':>12} {'c':>14}  recognized as")
for label, A in systems:
    sol = solve_r2(A)
    match = recognize(sol.c)
    names = []
    if match.minimal is not None:
        s, t = match.minimal
        names.append(f"minimal (s,t)=({s},{t})")
    if match.parafermion is not None:
        names.append(f"parafermion n={match.parafermion}")
    if match.rational is not None and not names:
        names.append(f"rational {match.rational}")
    star = "*" if sol.principal_is_boundary else " "
    print(
        f"{label:<22} {sol.x:>12.9f} {sol.y:>12.9f}{star} {sol.c:>14.11f}  "
        + ("; ".join(names) if names else "-")
    )
print("  (* boundary solution: the only solution sits at a corner of the square)")

# Multiplicity: along the family (a 1-a; 1-a a) the solution is unique
# for larger a but splits into three interior solutions as a shrinks.
print()
print("solution count along the family (a 1-a; 1-a a)")
for num, den in [(3, 10), (2, 10), (1, 10), (1, 20)]:
    a = F(num, den)
    sol = solve_r2(M(a, 1 - a, a))
    pts = ", ".join(f"({x:.4f}, {y:.4f})" for x, y in sol.interior)
    print(f"  a = {str(a):>5}: {sol.multiplicity} interior solution(s)  {pts}")
