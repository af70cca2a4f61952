"""Normalized Rogers dilogarithm on [0, 1] and its functional equations.

The function computed here is

    L(x) = (6/pi^2) * ( Sum_{n>=1} x^n / n^2  +  (1/2) ln(x) ln(1-x) ),

normalized so that L(0) = 0 and L(1) = 1.  L is strictly increasing on
[0, 1].  Evaluation sums the series directly for x <= 1/2, where it is
geometrically convergent, and uses the reflection property

    L(x) + L(1-x) = 1

for x > 1/2, which avoids the logarithmic singularity of the series
representation near 1.

Special values (exact):

    L(0) = 0,  L(1-rho) = 2/5,  L(1/2) = 1/2,  L(rho) = 3/5,  L(1) = 1,

where rho = (sqrt(5)-1)/2 is the positive root of x^2 + x = 1.

The residual checkers return |lhs - rhs| for the reflection property,
Abel's duplication formula and the five-term (pentagon) relation; they
exist so that the evaluation path can be tested against the algebra it
is supposed to satisfy.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

_SIX_OVER_PI2 = 6.0 / (math.pi * math.pi)

# Series term count is bounded: for x <= 1/2 the terms fall below 1e-20
# after ~64 steps, so a fixed cap guards against float pathologies only.
_MAX_TERMS = 256


def _as_unit_float(x) -> float:
    """Coerce to float and check membership in [0, 1]."""
    if isinstance(x, Fraction):
        x = float(x)
    x = float(x)
    if not math.isfinite(x) or x < 0.0 or x > 1.0:
        raise DomainError(f"argument {x!r} outside [0, 1]")
    return x


def rogers_L(x) -> float:
    """Normalized Rogers dilogarithm L(x) for x in [0, 1]."""
    x = _as_unit_float(x)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    if x > 0.5:
        return 1.0 - rogers_L(1.0 - x)
    terms = []
    p = 1.0
    for n in range(1, _MAX_TERMS + 1):
        p *= x
        t = p / (n * n)
        terms.append(t)
        if t < 1e-20:
            break
    terms.append(0.5 * math.log(x) * math.log1p(-x))
    return _SIX_OVER_PI2 * math.fsum(terms)


def check_reflection(x) -> float:
    """Residual |L(x) + L(1-x) - 1|."""
    x = _as_unit_float(x)
    return abs(rogers_L(x) + rogers_L(1.0 - x) - 1.0)


def check_duplication(x) -> float:
    """Residual of Abel's duplication formula,

        (1/2) L(x^2) = L(x) - L(x/(1+x)),

    valid for x in [0, 1].
    """
    x = _as_unit_float(x)
    return abs(0.5 * rogers_L(x * x) - rogers_L(x) + rogers_L(x / (1.0 + x)))


def check_five_term(x, y) -> float:
    """Residual of the five-term (pentagon) relation

        L(x) + L(y) = L(xy) + L(x(1-y)/(1-xy)) + L(y(1-x)/(1-xy))

    for x, y in [0, 1).  Raises DomainError when xy = 1 (unreachable for
    arguments strictly below 1, but guarded against float edge input).
    """
    x = _as_unit_float(x)
    y = _as_unit_float(y)
    if x == 1.0 or y == 1.0 or x * y == 1.0:
        raise DomainError("five-term relation needs x, y < 1")
    denom = 1.0 - x * y
    lhs = rogers_L(x) + rogers_L(y)
    rhs = (
        rogers_L(x * y)
        + rogers_L(x * (1.0 - y) / denom)
        + rogers_L(y * (1.0 - x) / denom)
    )
    return abs(lhs - rhs)


def rogers_L_mp(x, dps: int = 200):
    """High-precision L(x) via mpmath, same series + reflection scheme.

    `x` may be an mpf, float, int, or Fraction; Fractions convert exactly.
    Returns an mpf carrying `dps` digits.  This is the reference oracle
    used by the test suite and by the optional high-precision identity
    verification; it shares no code with the binary64 path.
    """
    from mpmath import mp

    with mp.workdps(dps + 10):
        if isinstance(x, Fraction):
            xx = mp.mpf(x.numerator) / mp.mpf(x.denominator)
        else:
            xx = mp.mpf(x)
        if xx < 0 or xx > 1:
            raise DomainError(f"argument {x!r} outside [0, 1]")
        if xx == 0:
            out = mp.mpf(0)
        elif xx == 1:
            out = mp.mpf(1)
        elif xx > 0.5:
            out = 1 - rogers_L_mp(1 - xx, dps=dps + 5)
        else:
            s = mp.mpf(0)
            p = mp.mpf(1)
            tiny = mp.mpf(10) ** (-(dps + 8))
            n = 0
            while True:
                n += 1
                p *= xx
                t = p / (n * n)
                s += t
                if t < tiny:
                    break
            s += mp.log(xx) * mp.log(1 - xx) / 2
            out = 6 * s / mp.pi**2
    with mp.workdps(dps):
        return +out
