"""Tests for the normalized Rogers dilogarithm.

Expected decimals were frozen from the mpmath evaluation at 40 digits
(rogers_L_mp, verified against mpmath.polylog directly); functional
equations are checked as residual properties on seeded grids.
"""

import math

import mpmath
import numpy as np
import pytest

from dilogtba import (
    DomainError,
    check_duplication,
    check_five_term,
    check_reflection,
    rogers_L,
    rogers_L_mp,
)

RHO = (math.sqrt(5.0) - 1.0) / 2.0


def test_special_values():
    # L(0)=0, L(1-rho)=2/5, L(1/2)=1/2, L(rho)=3/5, L(1)=1
    table = [
        (0.0, 0.0),
        (1.0 - RHO, 0.4),
        (0.5, 0.5),
        (RHO, 0.6),
        (1.0, 1.0),
    ]
    for x, want in table:
        assert abs(rogers_L(x) - want) <= 1e-15


def test_frozen_decimals():
    # mpmath at 40 digits
    assert abs(rogers_L(0.3) - 0.32879310315161342247) <= 2e-16
    assert abs(rogers_L(0.7) - 0.67120689684838657753) <= 2e-16
    assert abs(rogers_L(1.0 / 3.0) - 0.35803119227896059692) <= 2e-16
    assert abs(rogers_L(0.9) - 0.86387383422584938508) <= 2e-16
    assert abs(rogers_L(0.05) - 0.077492334641460603694) <= 2e-16


def test_domain():
    for bad in (-0.1, 1.1, 2.0, -1e-9):
        with pytest.raises(DomainError):
            rogers_L(bad)
    with pytest.raises(DomainError):
        rogers_L(float("nan"))


def test_reflection_property():
    xs = np.linspace(0.0, 1.0, 1001)
    worst = max(abs(check_reflection(float(x))) for x in xs)
    assert worst <= 1e-12


def test_duplication_property():
    xs = np.linspace(1e-6, 1.0 - 1e-6, 999)
    worst = max(abs(check_duplication(float(x))) for x in xs)
    assert worst <= 1e-12


def test_five_term_property():
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(1000):
        x = float(rng.uniform(1e-6, 1.0 - 1e-6))
        y = float(rng.uniform(1e-6, 1.0 - 1e-6))
        worst = max(worst, abs(check_five_term(x, y)))
    assert worst <= 1e-12


def test_five_term_domain():
    with pytest.raises(DomainError):
        check_five_term(1.0, 0.5)


def test_monotone_increasing():
    xs = np.linspace(0.0, 1.0, 2001)
    vals = [rogers_L(float(x)) for x in xs]
    assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_against_mp_oracle():
    # live high-precision oracle on a dyadic grid
    xs = [k / 256.0 for k in range(257)]
    for x in xs:
        ref = float(rogers_L_mp(x, dps=40))
        assert abs(rogers_L(x) - ref) <= 5e-15, x


def test_mp_special_value():
    with mpmath.workdps(60):
        rho = (mpmath.sqrt(5) - 1) / 2
        res = abs(rogers_L_mp(1 - rho, dps=60) - mpmath.mpf(2) / 5)
        assert res < mpmath.mpf(10) ** -50


def test_mp_reflection():
    with mpmath.workdps(40):
        for x in (mpmath.mpf(1) / 7, mpmath.mpf(3) / 5, mpmath.mpf("0.91")):
            res = abs(rogers_L_mp(x, dps=40) + rogers_L_mp(1 - x, dps=40) - 1)
            assert res < mpmath.mpf(10) ** -35
