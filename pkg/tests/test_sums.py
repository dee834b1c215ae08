from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulersum import (
    BernoulliTable,
    DomainError,
    SumReport,
    bernoulli_number,
    binomial,
    parity_residual,
    s_sum_closed,
    s_sum_naive,
    t_sum_closed,
    t_sum_expanded,
    t_sum_naive,
    verify_range,
)


@pytest.mark.parametrize("m,k,expected", [(1, 2, -1), (0, 5, 1), (3, 0, 0), (2, 3, 3), (2, 4, -6)])
def test_t_sum_naive(m, k, expected):
    assert t_sum_naive(m, k) == expected


@pytest.mark.parametrize("m,k,expected", [(1, 2, -1), (2, 3, 3), (2, 4, -6)])
def test_t_sum_closed(m, k, expected):
    assert t_sum_closed(m, k) == expected


def test_t_sum_closed_empty_sum():
    for m in range(20):
        assert t_sum_closed(m, 0) == 0


def test_t_sum_closed_m_zero():
    for k in range(20):
        assert t_sum_closed(0, k) == (k % 2)


@pytest.mark.parametrize("m,k,expected", [(1, 2, -1), (2, 4, -6)])
def test_t_sum_expanded(m, k, expected):
    assert t_sum_expanded(m, k) == expected


def test_t_sum_expanded_rejects_m_zero():
    with pytest.raises(DomainError):
        t_sum_expanded(0, 3)


def test_closed_expanded_naive_agree_small_grid():
    for m in range(13):
        for k in range(30):
            naive = t_sum_naive(m, k)
            assert t_sum_closed(m, k) == naive
            if m:
                assert t_sum_expanded(m, k) == naive


@given(st.integers(1, 40), st.integers(0, 400))
def test_closed_form_is_integer(m, k):
    assert t_sum_closed(m, k).denominator == 1


@pytest.mark.parametrize("m,k", [(3, 2), (5, 10)])
def test_parity_residual_examples(m, k):
    assert parity_residual(m, k) == 0


@pytest.mark.parametrize("m,k", [(2, 3), (1, 0), (0, 4)])
def test_parity_residual_domain(m, k):
    with pytest.raises(DomainError):
        parity_residual(m, k)


@pytest.mark.parametrize("n,expected", [(0, 1), (1, F(-1, 2)), (2, F(1, 6)), (4, F(-1, 30)), (3, 0)])
def test_bernoulli(n, expected):
    assert bernoulli_number(n) == expected


def test_bernoulli_recurrence():
    t = BernoulliTable()
    t.extend(30)
    assert t.computed_upto == 30
    for n in range(1, 31):
        assert sum(binomial(n + 1, k) * t[k] for k in range(n + 1)) == 0


@pytest.mark.parametrize(
    "fn,n,k,expected",
    [
        (s_sum_closed, 1, 3, 3),
        (s_sum_closed, 0, 7, 7),
        (s_sum_closed, 2, 4, 14),
        (s_sum_naive, 2, 4, 14),
        (s_sum_naive, 5, 0, 0),
        (s_sum_naive, 0, 1, 1),
    ],
)
def test_power_sums(fn, n, k, expected):
    assert fn(n, k) == expected


def test_faulhaber_small_grid():
    for n in range(15):
        for k in range(40):
            assert s_sum_closed(n, k) == s_sum_naive(n, k)


def test_verify_range_shapes():
    reports = verify_range(2, 2)
    assert len(reports) == 9
    assert all(r.all_agree for r in reports)
    assert [(r.m, r.k) for r in reports] == [(m, k) for m in range(3) for k in range(3)]
    only = verify_range(0, 0)
    assert len(only) == 1 and only[0].all_agree and only[0].expanded_value is None


def test_sum_report_json_and_disagreement():
    good = SumReport(2, 3, F(3), F(3), F(3))
    assert good.to_json() == {"m": 2, "k": 3, "closed": "3", "expanded": "3", "naive": "3", "all_agree": True}
    assert SumReport(0, 3, F(1), None, F(1)).to_json()["expanded"] is None
    assert not SumReport(2, 3, F(3), F(4), F(3)).all_agree
    assert not SumReport(2, 3, F(3), F(3), F(5, 2)).all_agree


def test_negative_arguments_rejected():
    with pytest.raises(DomainError):
        t_sum_naive(-1, 3)
    with pytest.raises(DomainError):
        s_sum_closed(2, -1)
