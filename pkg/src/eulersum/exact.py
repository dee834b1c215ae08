"""Exact scalars, dense polynomials and truncated power series over the rationals.

``Rational`` is :class:`fractions.Fraction`: it normalises eagerly, keeps the
denominator positive and represents zero as ``0/1``.  Its ``str`` form is
already the canonical ``"p/q"`` / ``"p"`` text form used everywhere else.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ZeroConstantTerm

__all__ = [
    "Rational",
    "NEG_INF_DEGREE",
    "Polynomial",
    "TruncatedSeries",
    "binomial",
    "format_rational",
    "parse_rational",
    "poly_eval",
    "series_exp_scaled",
    "series_reciprocal",
]

Rational = Fraction
RationalLike = Union[Fraction, int]

_RATIONAL_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def format_rational(q: RationalLike) -> str:
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    """Parse the canonical ``"p/q"`` form; reject anything not in lowest terms."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a canonical rational: {text!r}")
    q = Fraction(text)
    if str(q) != text:
        raise ValueError(f"rational not in lowest terms: {text!r}")
    return q


def binomial(n: int, k: int) -> int:
    """C(n, k) for non-negative n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return math.comb(n, k)


class _NegInfDegree:
    """Degree of the zero polynomial. Compares below every integer and refuses arithmetic."""

    __slots__ = ()

    def __lt__(self, other: object) -> bool:
        return not isinstance(other, _NegInfDegree)

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return isinstance(other, _NegInfDegree)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _NegInfDegree)

    def __hash__(self) -> int:
        return hash("-inf-degree")

    def __repr__(self) -> str:
        return "NEG_INF_DEGREE"


NEG_INF_DEGREE = _NegInfDegree()


class Polynomial:
    """Immutable dense polynomial; ``coefficients[i]`` multiplies ``x**i``.

    The zero polynomial has an empty coefficient tuple and degree
    ``NEG_INF_DEGREE``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike] = ()) -> None:
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> Polynomial:
        return cls([0] * n + [c])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | _NegInfDegree:
        if not self._coeffs:
            return NEG_INF_DEGREE
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Polynomial | RationalLike) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self._coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, a: RationalLike = 1) -> Polynomial:
        """Return p(x + a), re-expanded with binomial coefficients."""
        a = Fraction(a)
        out = [Fraction(0)] * len(self._coeffs)
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            apow = Fraction(1)
            # c * (x + a)^i contributes C(i, j) a^(i-j) to x^j
            for j in range(i, -1, -1):
                out[j] += c * binomial(i, j) * apow
                apow *= a
        return Polynomial(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(map(str, self._coeffs))}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Horner evaluation of ``p`` at ``x`` in exact arithmetic."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


class TruncatedSeries:
    """Power series in t kept to order N (N + 1 coefficients).

    Coefficients are plain Taylor coefficients (factorials already divided
    out), so multiplication is a truncated Cauchy product.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coefficients: Sequence[RationalLike], order: int | None = None) -> None:
        if order is None:
            order = len(coefficients) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        coeffs = [Fraction(c) for c in coefficients[: order + 1]]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._order = order
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def _check(self, other: TruncatedSeries) -> None:
        if other._order != self._order:
            raise ValueError(f"series orders differ: {self._order} vs {other._order}")

    def __add__(self, other: TruncatedSeries | RationalLike) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((self._coeffs[0] + other,) + self._coeffs[1:], self._order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self._order)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs], self._order)

    def __sub__(self, other: TruncatedSeries | RationalLike) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other: TruncatedSeries | RationalLike) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs], self._order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        a, b = self._coeffs, other._coeffs
        out = [sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)) for n in range(self._order + 1)]
        return TruncatedSeries(out, self._order)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._order == other._order and self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(map(str, self._coeffs))}])"


def series_exp_scaled(a: RationalLike, order: int) -> TruncatedSeries:
    """Series of ``exp(a*t)``: coefficient n is ``a**n / n!``."""
    if order < 0:
        raise ValueError("series order must be non-negative")
    a = Fraction(a)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * a / n)
    return TruncatedSeries(coeffs, order)


def series_reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """Return r with s*r = 1 + O(t^(N+1)).

    Raises ZeroConstantTerm if s has no constant term.
    """
    c = s.coefficients
    if c[0] == 0:
        raise ZeroConstantTerm("series has zero constant term")
    inv0 = 1 / c[0]
    r = [inv0]
    for n in range(1, s.order + 1):
        acc = sum((c[i] * r[n - i] for i in range(1, n + 1)), Fraction(0))
        r.append(-acc * inv0)
    return TruncatedSeries(r, s.order)
