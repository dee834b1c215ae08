"""Euler numbers and Euler polynomials (convention E_n = E_n(0), generated by 2/(e^t + 1))."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import List

from .exact import (
    Polynomial,
    RationalLike,
    binomial,
    poly_eval,
    series_exp_scaled,
    series_reciprocal,
)

__all__ = [
    "EulerTable",
    "euler_number",
    "euler_numbers_upto",
    "euler_polynomial",
    "verify_generating_function",
]


class EulerTable:
    """Memoised E_0, E_1, ... grown by the recurrence

        sum_{k=0}^{n} C(n, k) E_k + E_n = 2 [n == 0],

    i.e. 2 E_n = -sum_{k<n} C(n, k) E_k for n >= 1.  Only E_0 = 1 seeds it.
    Growth is serialised by a lock; readers always see a consistent prefix.
    """

    def __init__(self) -> None:
        self._values: List[Fraction] = [Fraction(1)]
        self._polys: dict[int, Polynomial] = {}
        self._lock = threading.Lock()

    @property
    def computed_upto(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._values)

    def extend(self, n: int) -> None:
        if n < 0:
            raise ValueError("index must be non-negative")
        if n < len(self._values):
            return
        with self._lock:
            vals = list(self._values)
            for m in range(len(vals), n + 1):
                acc = sum((binomial(m, k) * vals[k] for k in range(m)), Fraction(0))
                vals.append(-acc / 2)
            self._values = vals

    def __getitem__(self, n: int) -> Fraction:
        self.extend(n)
        return self._values[n]

    def upto(self, n: int) -> list[Fraction]:
        self.extend(n)
        return self._values[: n + 1]

    def polynomial(self, n: int) -> Polynomial:
        poly = self._polys.get(n)
        if poly is None:
            vals = self.upto(n)
            # coefficient of x^(n-k) is C(n, k) E_k
            coeffs = [binomial(n, n - i) * vals[n - i] for i in range(n + 1)]
            poly = Polynomial(coeffs)
            self._polys[n] = poly
        return poly


_TABLE = EulerTable()


def euler_number(n: int) -> Fraction:
    """Return E_n (E_0 = 1, E_1 = -1/2, E_2 = 0, E_3 = 1/4, ...)."""
    return _TABLE[n]


def euler_numbers_upto(n: int) -> list[Fraction]:
    return _TABLE.upto(n)


def euler_polynomial(n: int) -> Polynomial:
    """E_n(x) = sum_{k=0}^{n} C(n, k) E_k x^(n-k); monic of degree n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _TABLE.polynomial(n)


def verify_generating_function(x: RationalLike, order: int) -> bool:
    """Check n! [t^n] 2 e^(xt) / (e^t + 1) == E_n(x) for every n <= order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    denom = series_exp_scaled(1, order) + 1
    gen = series_reciprocal(denom) * series_exp_scaled(x, order) * 2
    return all(
        gen[n] * math.factorial(n) == poly_eval(euler_polynomial(n), x)
        for n in range(order + 1)
    )
