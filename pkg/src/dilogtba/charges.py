"""Recognition of computed dilogarithm sums against known charge spectra.

A value c is tested against three families:

  * minimal models:      c = 1 - 6/(s t) with s, t coprime integers;
                         s t may be negative, in which case c > 1
  * parafermionic:       c = 2 (n - 1)/(n + 2) for integer n >= 2
  * plain rationals:     c = p/q found by continued-fraction convergents

All families are scanned independently and every match found is
reported; the caller decides which to trust.  Matches are deterministic:
the minimal match minimizes |s t|, the parafermionic match minimizes n,
and (s, t) is normalized so that 0 < s <= |t| with the sign carried by
t, s being the largest divisor of |s t| below the square root that is
coprime to its cofactor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["ChargeMatch", "recognize"]


@dataclass(frozen=True)
class ChargeMatch:
    """Matches of a real value against the charge spectra.

    minimal      (s, t) with c = 1 - 6/(st), gcd(s, |t|) = 1, or None
    parafermion  n with c = 2(n-1)/(n+2), or None
    rational     (p, q) in lowest terms with c = p/q, or None
    residual     smallest absolute error among the matches (inf if none)
    """

    minimal: tuple[int, int] | None
    parafermion: int | None
    rational: tuple[int, int] | None
    residual: float

    @property
    def empty(self) -> bool:
        return self.minimal is None and self.parafermion is None and self.rational is None

    def ranked(self) -> list[tuple[str, str]]:
        """(kind, description) pairs: rational, then minimal, then parafermionic."""
        out = []
        if self.rational is not None:
            p, q = self.rational
            out.append(("rational", f"{p}/{q}"))
        if self.minimal is not None:
            s, t = self.minimal
            out.append(("minimal", f"(s,t)=({s},{t}), st={s * t}"))
        if self.parafermion is not None:
            out.append(("parafermion", f"n={self.parafermion}"))
        return out


def _balanced_coprime_split(n: int) -> tuple[int, int]:
    """Largest s <= sqrt(n) with s | n and gcd(s, n/s) = 1; returns (s, n/s)."""
    best = 1
    for k in range(math.isqrt(n), 0, -1):
        if n % k == 0 and math.gcd(k, n // k) == 1:
            best = k
            break
    return best, n // best


def recognize(
    c: float,
    tol: float = 1e-9,
    max_st: int = 200,
    max_n: int = 60,
    max_den: int = 10_000,
) -> ChargeMatch:
    """Match c (expected in [0, 2]) against the three charge families.

    The minimal-model scan tries |st| = 2 .. max_st with both signs and
    keeps the smallest |st| within tol; the parafermionic scan tries
    n = 2 .. max_n; the rational match uses the best fraction with
    denominator <= max_den.  Nothing matching leaves the corresponding
    field None; residual is the best error over the matches found.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")

    errors = []

    minimal = None
    for n in range(2, max_st + 1):
        err_pos = abs(c - (1.0 - 6.0 / n))
        err_neg = abs(c - (1.0 + 6.0 / n))
        if err_pos <= tol or err_neg <= tol:
            s, t = _balanced_coprime_split(n)
            if err_neg < err_pos:
                minimal = (s, -t)
                errors.append(err_neg)
            else:
                minimal = (s, t)
                errors.append(err_pos)
            break

    parafermion = None
    for n in range(2, max_n + 1):
        err = abs(c - 2.0 * (n - 1) / (n + 2))
        if err <= tol:
            parafermion = n
            errors.append(err)
            break

    rational = None
    fr = Fraction(c).limit_denominator(max_den)
    err = abs(c - float(fr))
    if err <= tol:
        rational = (fr.numerator, fr.denominator)
        errors.append(err)

    return ChargeMatch(
        minimal=minimal,
        parafermion=parafermion,
        rational=rational,
        residual=min(errors) if errors else math.inf,
    )
