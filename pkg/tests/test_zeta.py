from fractions import Fraction as F

import mpmath
import pytest

from eulersum import (
    DomainError,
    ToleranceNotMet,
    ZetaResult,
    euler_polynomial,
    poly_eval,
    remark_table,
    zeta_e,
    zeta_e_exact,
    zeta_e_integral,
    zeta_e_series,
)

from .oracles import euler_transform_sum

# Frozen from oracles.euler_transform_sum at 40 digits (200 terms, 150 averaging rounds).
with mpmath.workdps(40):
    TWO_LOG2 = mpmath.mpf("1.386294361119890618834464242916353136151")
    PI2_OVER_6 = mpmath.mpf("1.644934066848226436472415166646025189219")
    PI = mpmath.mpf("3.141592653589793238462643383279502884197")


def test_frozen_targets_match_oracle_and_constants():
    with mpmath.workdps(40):
        one = mpmath.mpf(1)
        checks = [
            (euler_transform_sum(lambda n: one / (n + 1)), TWO_LOG2 / 2, 2 * mpmath.log(2)),
            (euler_transform_sum(lambda n: one / (n + 1) ** 2), PI2_OVER_6 / 2, mpmath.pi**2 / 6),
            (euler_transform_sum(lambda n: one / (n + one / 2)), PI / 2, mpmath.pi),
        ]
        for oracle, half_target, constant in checks:
            assert abs(oracle - half_target) < mpmath.mpf(10) ** -35
            assert abs(2 * half_target - constant) < mpmath.mpf(10) ** -35


@pytest.mark.parametrize("n,x,expected", [(0, 1, 1), (1, 1, F(1, 2)), (2, 1, 0)])
def test_exact_remark_values(n, x, expected):
    assert zeta_e_exact(n, x) == expected


def test_exact_is_euler_polynomial():
    for n in range(4):
        for x in (F(1, 4), F(1, 2), F(3, 4), F(1)):
            assert zeta_e_exact(n, x) == poly_eval(euler_polynomial(n), x)


@pytest.mark.parametrize("s,x,target", [(1, 1, TWO_LOG2), (2, 1, PI2_OVER_6), (1, F(1, 2), PI)])
def test_series_hits_targets_within_bound(s, x, target):
    res = zeta_e_series(s, x, 1e-12)
    assert res.method == "series-accel"
    assert res.error_bound <= 1e-12
    assert abs(res.value - target) <= res.error_bound


@pytest.mark.parametrize("s,x", [(1, 1), (2, 1), (3.5, 0.25)])
def test_integral_agrees_with_series(s, x):
    a = zeta_e_series(s, x, 1e-10)
    b = zeta_e_integral(s, x, 1e-10)
    assert b.method == "quadrature"
    assert b.terms_or_nodes > 0
    assert abs(a.value - b.value) <= 1e-9


def test_integral_at_two_is_pi_squared_over_six():
    res = zeta_e_integral(2, 1, 1e-10)
    assert abs(res.value - PI2_OVER_6) <= max(res.error_bound, mpmath.mpf(1e-10))


@pytest.mark.parametrize("fn", [zeta_e_series, zeta_e_integral])
def test_monotone_refinement(fn):
    bounds = [fn(1.5, 0.5, eps).error_bound for eps in (1e-4, 1e-6, 1e-8, 1e-10, 1e-12, 1e-16, 1e-20)]
    assert all(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:]))


def test_series_domain_errors():
    for s, x in [(0, 1), (-0.5, 1), (1, 0), (1, -2)]:
        with pytest.raises(DomainError):
            zeta_e_series(s, x)


def test_integral_domain_errors():
    with pytest.raises(DomainError):
        zeta_e_integral(0.05, 1)
    with pytest.raises(DomainError):
        zeta_e_integral(1, 0)
    # s_min is configurable
    res = zeta_e_integral(0.05, 1, 1e-8, s_min=0.01)
    ref = zeta_e_series(0.05, 1, 1e-10)
    assert abs(res.value - ref.value) <= 1e-7


def test_budgets_raise_tolerance_not_met():
    with pytest.raises(ToleranceNotMet):
        zeta_e_series(1, 1, 1e-12, max_terms=5)
    with pytest.raises(ToleranceNotMet):
        zeta_e_integral(1, 1, 1e-10, max_nodes=20)


def test_dispatch():
    r = zeta_e(-1)
    assert r.method == "exact-negative" and r.exact == F(1, 2) and r.error_bound == 0
    assert zeta_e("0", "1/2").exact == 1
    assert zeta_e(1).method == "series-accel"
    assert zeta_e(1, method="quadrature", eps=1e-10).method == "quadrature"
    with pytest.raises(DomainError):
        zeta_e(-0.5, method="series")
    with pytest.raises(DomainError):
        zeta_e(0.5, method="exact")


def test_result_json():
    doc = zeta_e(-2, F(1, 2)).to_json()
    assert doc["method"] == "exact-negative"
    assert doc["exact"] == str(zeta_e_exact(2, F(1, 2)))
    assert doc["error_bound"] == "0"
    doc = zeta_e_series(1, 1).to_json(15)
    assert doc["value"] == "1.386294361119891"
    assert "exact" not in doc
    assert float(doc["error_bound"]) <= 1e-12


def test_result_invariants():
    with pytest.raises(ValueError):
        ZetaResult(mpmath.mpf(1), mpmath.mpf(-1), "quadrature", 3)
    with pytest.raises(ValueError):
        ZetaResult(mpmath.mpf(1), mpmath.mpf(0), "exact-negative", 0)
    with pytest.raises(ValueError):
        ZetaResult(mpmath.mpf(1), mpmath.mpf(0), "magic", 0)


def test_remark_table():
    assert remark_table() == [
        (0, 1, "2(1-1+1-1+...)"),
        (1, F(1, 2), "2(1-2+3-4+...)"),
        (2, 0, "2(1^2-2^2+3^2-4^2+...)"),
    ]
