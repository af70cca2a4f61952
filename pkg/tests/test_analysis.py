"""Tests for the exact matrix predicates, duality, and c bounds."""

import math
from fractions import Fraction as F

import numpy as np
import pytest

from dilogtba import (
    DomainError,
    RangeViolation,
    RationalSymmetricMatrix as M,
    SingularMatrixError,
    bounds_on_c,
    c_of,
    classify_vs_one,
    delta_fn,
    dual,
    family_c1,
    solve_r2,
    uniqueness_guarantee,
    uniqueness_weak_tests,
)


def _rand_matrix(rng, max_num=32, max_den=8, allow_neg_b=True):
    a = F(int(rng.integers(0, max_num + 1)), int(rng.integers(1, max_den + 1)))
    d = F(int(rng.integers(0, max_num + 1)), int(rng.integers(1, max_den + 1)))
    if a < d:
        a, d = d, a
    den = int(rng.integers(1, max_den + 1))
    lo = int(-min(a, d) * den) if allow_neg_b else 0
    b = F(int(rng.integers(lo, max_num + 1)), den)
    if b < -min(a, d):
        b = -min(a, d)
    return M(a, b, d)


# ---------------------------------------------------------------------------
# uniqueness


def test_guarantee_nonnegative_discriminant():
    for entries in [(2, 1, 1), (4, F(5, 2), 2), (1, 0, 1), (F(5, 4), 1, 1)]:
        A = M(*entries)
        assert A.D >= 0
        assert uniqueness_guarantee(A)


def test_guarantee_negative_discriminant_cases():
    # D = -1/16 with the d = 0 slack vanishing: not certified
    A4 = M(F(1, 4), F(1, 4), 0)
    assert A4.D < 0
    assert not uniqueness_guarantee(A4)
    # small d keeps the kappa slack alive: certified despite D < 0
    A = M(2, F(1, 5), F(1, 100))
    assert A.D == F(-1, 50)
    assert uniqueness_guarantee(A)
    assert solve_r2(A).multiplicity == 1
    # symmetric a + b = 1 family at a = 0.3: not certified by the bound
    assert not uniqueness_guarantee(M(F(3, 10), F(7, 10), F(3, 10)))


def test_weak_tests_imply_guarantee():
    rng = np.random.default_rng(7)
    checked = 0
    for _ in range(2000):
        A = _rand_matrix(rng)
        if uniqueness_weak_tests(A):
            checked += 1
            assert uniqueness_guarantee(A), A
    assert checked > 200


def test_guarantee_soundness_sample():
    # guarantee true -> the scan finds exactly one interior solution
    # (the full 10^4-trial run is in the acceptance suite)
    rng = np.random.default_rng(5)
    checked = 0
    for _ in range(500):
        A = _rand_matrix(rng, max_num=40, max_den=10)
        if A.a == 0 and A.d == 0 and A.b == F(1, 2):
            continue
        if not uniqueness_guarantee(A):
            continue
        try:
            sol = solve_r2(A)
        except Exception:
            continue
        checked += 1
        assert len(sol.interior) <= 1, A
    assert checked > 100


# ---------------------------------------------------------------------------
# duality


def test_dual_exact_entries():
    A = M(4, F(5, 2), 2)
    B = dual(A)
    assert B.entries == (F(2, 7), F(-5, 14), F(4, 7))
    assert dual(B).entries == A.entries  # involution


def test_dual_singular():
    with pytest.raises(SingularMatrixError):
        dual(M(F(1, 2), F(1, 2), F(1, 2)))


def test_dual_sum_examples():
    # stated dual values: c[A] + c[dual] = 2 with both sides solved
    cases = [
        ((4, F(5, 2), 2), 1.6),             # 2/5 + 8/5
        ((2, F(3, 2), F(3, 2)), 1.5),       # 1/2 + 3/2
        ((4, F(3, 2), 1), 1.5),
        ((F(5, 4), 1, 1), 1.4),             # 3/5 + 7/5
        ((1, F(1, 2), F(1, 2)), 1.25),      # 3/4 + 5/4
        ((F(4, 3), F(1, 6), F(1, 3)), 8.0 / 7.0),  # 6/7 + 8/7
    ]
    for entries, c_dual in cases:
        A = M(*entries)
        B = dual(A).canonical()[0]
        got = solve_r2(B, enforce_range=False).c
        assert abs(got - c_dual) <= 1e-9, entries
        assert abs(c_of(A) + got - 2.0) <= 1e-9, entries


def test_random_duality_sums():
    rng = np.random.default_rng(11)
    done = 0
    while done < 30:
        A = _rand_matrix(rng, max_num=24, max_den=8)
        if A.D == 0 or A.a == 0 or A.d == 0:
            continue
        if A.a == 0 and A.d == 0 and A.b == F(1, 2):
            continue
        try:
            sa = solve_r2(A)
            sb = solve_r2(dual(A).canonical()[0], enforce_range=False)
        except Exception:
            continue
        if sa.multiplicity != 1 or sb.multiplicity != 1:
            continue
        if sa.principal_is_boundary or sb.principal_is_boundary:
            continue
        done += 1
        assert abs(sa.c + sb.c - 2.0) <= 1e-9, A


# ---------------------------------------------------------------------------
# classification against c = 1


def test_classify_discrete_matrices():
    less = [(2, 1, 1), (1, F(1, 2), F(3, 4)), (F(5, 4), 1, 1),
            (2, F(3, 2), F(3, 2)), (4, F(3, 2), 1), (4, F(5, 2), 2),
            (F(4, 3), F(1, 6), F(1, 3))]
    greater = [(F(1, 4), F(1, 4), 0), (F(4, 9), F(1, 6), 0)]
    for entries in less:
        assert classify_vs_one(M(*entries)).relation == "less", entries
    for entries in greater:
        assert classify_vs_one(M(*entries)).relation == "greater", entries


def test_classify_equality_family():
    # ad = (1/2 - b)^2 with b <= 1/2 puts c exactly at 1
    A = M(1, F(1, 4), F(1, 16))
    res = classify_vs_one(A)
    assert res.relation == "equal"
    assert abs(c_of(A) - 1.0) <= 1e-10


def test_classify_agrees_with_solver():
    rng = np.random.default_rng(3)
    done = 0
    while done < 60:
        A = _rand_matrix(rng, max_num=24, max_den=6)
        if A.a == 0 and A.d == 0 and A.b == F(1, 2):
            continue
        try:
            c = c_of(A)
        except Exception:
            continue
        done += 1
        rel = classify_vs_one(A).relation
        if rel == "greater":
            assert c > 1.0 - 1e-9, A
        elif rel == "less":
            assert c < 1.0 + 1e-9, A
        else:
            assert abs(c - 1.0) <= 1e-9, A


# ---------------------------------------------------------------------------
# the x + y = 1 family


def test_family_exact_branch():
    res = family_c1(4, 1)
    assert res.is_exact
    assert res.b_exact == F(-3, 2)
    assert res.matrix.entries == (F(4), F(-3, 2), F(1))
    sol = solve_r2(res.matrix, enforce_range=False)
    assert abs(sol.x + sol.y - 1.0) <= 1e-10


def test_family_inexact_branch():
    res = family_c1(2, 1)  # b = 1/2 - sqrt(2), irrational
    assert not res.is_exact
    assert res.b_exact is None
    assert abs(res.b - (0.5 - math.sqrt(2.0))) <= 1e-15
    sol = solve_r2(res.matrix, enforce_range=False)
    assert abs(sol.x + sol.y - 1.0) <= 1e-10
    assert abs(sol.c - 1.0) <= 1e-10


def test_family_in_range_member():
    res = family_c1(F(1, 4), F(1, 4))
    assert res.b_exact == F(1, 4)
    sol = solve_r2(res.matrix)  # inside the entry range
    assert abs(sol.x + sol.y - 1.0) <= 1e-10


def test_family_domain():
    with pytest.raises(RangeViolation):
        family_c1(-1, 2)
    with pytest.raises(DomainError):
        family_c1(0.3, 0.5)  # inexact floats rejected


def test_family_sampled():
    rng = np.random.default_rng(17)
    for _ in range(20):
        a = F(int(rng.integers(1, 40)), int(rng.integers(1, 10)))
        d = F(int(rng.integers(1, 40)), int(rng.integers(1, 10)))
        res = family_c1(a, d)
        sol = solve_r2(res.matrix, enforce_range=False)
        assert abs(sol.x + sol.y - 1.0) <= 1e-10, (a, d)


# ---------------------------------------------------------------------------
# bounds


def test_bounds_heptagonal():
    res = bounds_on_c(M(2, 1, 1))
    assert res.case_tag == "d<=b"
    assert res.lower <= 4.0 / 7.0 <= res.upper
    assert abs(res.lower - 0.391678573979) <= 1e-9
    assert abs(res.upper - 0.658056308754) <= 1e-9


def test_bounds_cases_cover():
    cases = {
        (2, F(-1, 2), 2): "b<0",
        (2, 1, 1): "d<=b",
        (2, F(1, 2), 1): "d>=b>0",
    }
    for entries, tag in cases.items():
        A = M(*entries)
        res = bounds_on_c(A)
        assert res.case_tag == tag
        c = c_of(A)
        assert res.lower - 1e-12 <= c <= res.upper + 1e-12, entries


def test_bounds_bracket_sampled():
    rng = np.random.default_rng(23)
    done = 0
    while done < 100:
        A = _rand_matrix(rng, max_num=24, max_den=8)
        if A.d <= 0:
            continue
        try:
            c = c_of(A)
        except Exception:
            continue
        done += 1
        res = bounds_on_c(A)
        assert res.lower - 1e-9 <= c <= res.upper + 1e-9, A


def test_bounds_tightness_remark():
    # the two-step chain at a = 15/2: delta(15/2) + delta(15/4) < 2/5
    val = delta_fn(F(15, 2)) + delta_fn(F(15, 4))
    assert val < 0.4
    assert abs(val - 0.399287) <= 1e-5


def test_bounds_preconditions():
    with pytest.raises(RangeViolation):
        bounds_on_c(M(1, 1, 0))  # needs d > 0
    with pytest.raises(RangeViolation):
        bounds_on_c(M(1, 1, 2))  # needs a >= d
