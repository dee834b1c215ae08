"""Alternating and plain sums of powers of 0, 1, ..., k-1.

    T_m(k) = sum_{l=0}^{k-1} (-1)^l l^m
    S_n(k) = sum_{l=0}^{k-1} l^n

Both use 0^0 = 1.  Closed forms go through Euler numbers (T) and Bernoulli
numbers with B_1 = -1/2 (S); the ``*_naive`` functions are the brute-force
oracles.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional

from .errors import DomainError
from .euler import euler_number, euler_polynomial
from .exact import binomial, format_rational, poly_eval

__all__ = [
    "BernoulliTable",
    "SumReport",
    "bernoulli_number",
    "parity_residual",
    "s_sum_closed",
    "s_sum_naive",
    "t_sum_closed",
    "t_sum_expanded",
    "t_sum_naive",
    "verify_range",
]


def _check_nonneg(**kwargs: int) -> None:
    for name, v in kwargs.items():
        if v < 0:
            raise DomainError(f"{name} must be non-negative, got {v}")


def t_sum_naive(m: int, k: int) -> Fraction:
    _check_nonneg(m=m, k=k)
    even = sum(l**m for l in range(0, k, 2))
    odd = sum(l**m for l in range(1, k, 2))
    return Fraction(even - odd)


def t_sum_closed(m: int, k: int) -> Fraction:
    """T_m(k) = ((-1)^(k+1) E_m(k) + E_m) / 2."""
    _check_nonneg(m=m, k=k)
    sign = 1 if k % 2 else -1
    return (sign * poly_eval(euler_polynomial(m), k) + euler_number(m)) / 2


def _head_sum(m: int, k: int) -> Fraction:
    # sum_{l=0}^{m-1} C(m, l) E_l k^(m-l)
    return sum((binomial(m, l) * euler_number(l) * k ** (m - l) for l in range(m)), Fraction(0))


def t_sum_expanded(m: int, k: int) -> Fraction:
    """Binomially expanded form of T_m(k); requires m >= 1."""
    if m < 1:
        raise DomainError("expanded form needs m >= 1")
    _check_nonneg(k=k)
    sign = 1 if k % 2 else -1
    return sign * _head_sum(m, k) / 2 + euler_number(m) * (1 + sign) / 2


def parity_residual(m: int, k: int) -> Fraction:
    """T_m(k) + (1/2) sum_{l<m} C(m, l) E_l k^(m-l) for even k; zero when the identity holds."""
    if m < 1:
        raise DomainError("m must be positive")
    if k < 2 or k % 2:
        raise DomainError(f"k must be even and >= 2, got {k}")
    return t_sum_closed(m, k) + _head_sum(m, k) / 2


class BernoulliTable:
    """B_0, B_1, ... with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0 (n >= 1)."""

    def __init__(self) -> None:
        self._values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def computed_upto(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._values)

    def extend(self, n: int) -> None:
        if n < len(self._values):
            return
        with self._lock:
            vals = list(self._values)
            for m in range(len(vals), n + 1):
                acc = sum((binomial(m + 1, k) * vals[k] for k in range(m)), Fraction(0))
                vals.append(-acc / (m + 1))
            self._values = vals

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError("n must be non-negative")
        self.extend(n)
        return self._values[n]


_BERNOULLI = BernoulliTable()


def bernoulli_number(n: int) -> Fraction:
    return _BERNOULLI[n]


def s_sum_naive(n: int, k: int) -> Fraction:
    _check_nonneg(n=n, k=k)
    return Fraction(sum(l**n for l in range(k)))


def s_sum_closed(n: int, k: int) -> Fraction:
    """(1/(n+1)) sum_{i=0}^{n} C(n+1, i) B_i k^(n+1-i)."""
    _check_nonneg(n=n, k=k)
    acc = sum(
        (binomial(n + 1, i) * bernoulli_number(i) * k ** (n + 1 - i) for i in range(n + 1)),
        Fraction(0),
    )
    return acc / (n + 1)


@dataclass(frozen=True)
class SumReport:
    m: int
    k: int
    closed_value: Fraction
    expanded_value: Optional[Fraction]
    oracle_value: Fraction

    @property
    def all_agree(self) -> bool:
        if self.expanded_value is not None and self.expanded_value != self.closed_value:
            return False
        return self.closed_value == self.oracle_value

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "k": self.k,
            "closed": format_rational(self.closed_value),
            "expanded": None if self.expanded_value is None else format_rational(self.expanded_value),
            "naive": format_rational(self.oracle_value),
            "all_agree": self.all_agree,
        }


def verify_range(m_max: int, k_max: int) -> list[SumReport]:
    """One SumReport per (m, k) in [0, m_max] x [0, k_max], ordered by m then k."""
    _check_nonneg(m_max=m_max, k_max=k_max)
    return [
        SumReport(
            m=m,
            k=k,
            closed_value=t_sum_closed(m, k),
            expanded_value=t_sum_expanded(m, k) if m >= 1 else None,
            oracle_value=t_sum_naive(m, k),
        )
        for m in range(m_max + 1)
        for k in range(k_max + 1)
    ]
