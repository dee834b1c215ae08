"""Exact Euler numbers, alternating power sums and the Euler-zeta function."""

from .errors import DomainError, EulerSumError, ToleranceNotMet, ZeroConstantTerm
from .euler import (
    EulerTable,
    euler_number,
    euler_numbers_upto,
    euler_polynomial,
    verify_generating_function,
)
from .exact import (
    NEG_INF_DEGREE,
    Polynomial,
    Rational,
    TruncatedSeries,
    binomial,
    format_rational,
    parse_rational,
    poly_eval,
    series_exp_scaled,
    series_reciprocal,
)
from .sums import (
    BernoulliTable,
    SumReport,
    bernoulli_number,
    parity_residual,
    s_sum_closed,
    s_sum_naive,
    t_sum_closed,
    t_sum_expanded,
    t_sum_naive,
    verify_range,
)
from .zeta import (
    ZetaResult,
    remark_table,
    zeta_e,
    zeta_e_exact,
    zeta_e_integral,
    zeta_e_series,
)

__version__ = "0.1.0"
