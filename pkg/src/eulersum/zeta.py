"""The Euler-zeta function

    zeta_E(s, x) = 2 * sum_{n>=0} (-1)^n / (n + x)^s

Three evaluation paths:

* exact values at s = -n (n = 0, 1, 2, ...), where zeta_E(-n, x) = E_n(x);
* the alternating series for real s > 0, accelerated with Chebyshev weights;
* the integral (2/Gamma(s)) int_0^inf t^(s-1) e^(-xt) / (1 + e^(-t)) dt by
  exp-sinh quadrature, independent of the series path.

Numeric work uses mpmath at no fewer than 30 significant digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Any, Optional, Union

import mpmath
from mpmath import mpf

from .errors import DomainError, ToleranceNotMet
from .euler import euler_polynomial
from .exact import RationalLike, format_rational, poly_eval

__all__ = [
    "DEFAULT_MAX_NODES",
    "DEFAULT_MAX_TERMS",
    "DEFAULT_S_MIN",
    "METHODS",
    "ZetaResult",
    "remark_table",
    "zeta_e",
    "zeta_e_exact",
    "zeta_e_integral",
    "zeta_e_series",
]

Real = Union[int, float, Fraction, str, mpf]

METHODS = ("exact-negative", "series-accel", "quadrature")
DEFAULT_MAX_TERMS = 10000
DEFAULT_MAX_NODES = 200000
DEFAULT_S_MIN = 0.1
MIN_DPS = 30
ROUNDING_ULPS = 10


@dataclass(frozen=True)
class ZetaResult:
    value: mpf
    error_bound: mpf
    method: str
    terms_or_nodes: int
    s: Any = None
    x: Any = None
    exact: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.error_bound < 0:
            raise ValueError("error_bound must be non-negative")
        if self.method == "exact-negative" and (self.exact is None or self.error_bound != 0):
            raise ValueError("exact results carry a rational value and a zero bound")

    def format_value(self, digits: int = 15) -> str:
        """Value rounded to ``digits`` places after the decimal point."""
        return _fixed(self.value, digits)

    def format_bound(self) -> str:
        if self.error_bound == 0:
            return "0"
        return mpmath.nstr(self.error_bound, 3, min_fixed=1, max_fixed=0)

    def to_json(self, digits: int = 15) -> dict[str, Any]:
        out: dict[str, Any] = {
            "s": _arg_text(self.s),
            "x": _arg_text(self.x),
            "value": self.format_value(digits),
            "error_bound": self.format_bound(),
            "method": self.method,
            "terms_or_nodes": self.terms_or_nodes,
        }
        if self.exact is not None:
            out["exact"] = format_rational(self.exact)
        return out


def _fixed(v: mpf, digits: int) -> str:
    text = mpmath.nstr(v, max(digits + 30, 50), min_fixed=-math.inf, max_fixed=math.inf)
    q = Decimal(text).quantize(Decimal(1).scaleb(-digits))
    if q == 0:
        q = abs(q)
    return str(q)


def _arg_text(v: Any) -> Any:
    if v is None:
        return None
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, mpf):
        return mpmath.nstr(v, 17)
    return str(v)


def _to_mpf(v: Real) -> mpf:
    if isinstance(v, Fraction):
        return mpf(v.numerator) / v.denominator
    if isinstance(v, str):
        return _to_mpf(Fraction(v))
    return mpf(v)


def _dps_for(eps: mpf | float) -> int:
    return max(MIN_DPS, int(math.ceil(-math.log10(float(eps)))) + 10)


def zeta_e_exact(n: int, x: RationalLike) -> Fraction:
    """zeta_E(-n, x) = E_n(x) for n >= 0, in exact arithmetic."""
    if n < 0:
        raise DomainError("n must be non-negative (the value returned is at s = -n)")
    return poly_eval(euler_polynomial(n), x)


def zeta_e_series(
    s: Real,
    x: Real = 1,
    eps: float = 1e-12,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> ZetaResult:
    """Accelerated alternating-series value of zeta_E(s, x) for real s > 0, x > 0.

    The terms a_n = (n + x)^(-s) are moments of a positive measure on [0, 1],
    so the Chebyshev-weighted partial sum with n terms is within a_0 / d_n of
    the series, d_n = ((3 + sqrt 8)^n + (3 + sqrt 8)^(-n)) / 2.
    """
    if eps <= 0:
        raise DomainError("eps must be positive")
    dps = _dps_for(eps)
    with mpmath.workdps(dps):
        sm, xm = _to_mpf(s), _to_mpf(x)
        if sm <= 0:
            raise DomainError(f"series evaluation needs s > 0, got s = {s}")
        if xm <= 0:
            raise DomainError(f"x must be positive, got x = {x}")
        a0 = xm ** (-sm)
        base = 3 + mpmath.sqrt(8)
        # 2 * a0 / d_n <= 4 * a0 / base^n; keep that under eps / 2
        n = max(1, int(mpmath.ceil(mpmath.log(8 * a0 / mpf(eps)) / mpmath.log(base))))
        if n > max_terms:
            raise ToleranceNotMet(f"needs {n} terms for eps={eps}, budget is {max_terms}")

        d = base**n
        d = (d + 1 / d) / 2
        b = mpf(-1)
        c = -d
        acc = mpf(0)
        for k in range(n):
            c = b - c
            acc += c * (k + xm) ** (-sm)
            b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
        value = 2 * acc / d

        truncation = 2 * a0 / d
        rounding = ROUNDING_ULPS * 2 * a0 * mpmath.eps
        bound = truncation + rounding
    if bound > eps:
        raise ToleranceNotMet(f"certified bound {bound} exceeds eps={eps}")
    return ZetaResult(value, bound, "series-accel", n, s=s, x=x)


def _exp_sinh_integrand(sm: mpf, xm: mpf):
    half_pi = mpmath.pi / 2

    def g(u: mpf) -> mpf:
        # t = exp(pi/2 sinh u); integrand t^(s-1) e^(-xt)/(1+e^(-t)) times dt/du
        w = half_pi * mpmath.sinh(u)
        t = mpmath.exp(w)
        return mpmath.exp(sm * w - xm * t) / (1 + mpmath.exp(-t)) * half_pi * mpmath.cosh(u)

    return g


def _tail_extent(g, direction: int, tiny: mpf) -> int:
    """First integer step |u| past the peak where the integrand drops below ``tiny``."""
    prev = abs(g(mpf(0)))
    k = 1
    while True:
        cur = abs(g(mpf(direction * k)))
        if cur < tiny and cur <= prev:
            return k
        prev = cur
        k += 1
        if k > 64:
            return k


def zeta_e_integral(
    s: Real,
    x: Real = 1,
    eps: float = 1e-10,
    *,
    s_min: float = DEFAULT_S_MIN,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_levels: int = 14,
) -> ZetaResult:
    """zeta_E(s, x) from its integral representation, by exp-sinh quadrature.

    The step is halved until two successive trapezoid sums differ by at most
    ``eps`` (after scaling by 2/Gamma(s)); that difference, plus the dropped
    tail mass and a rounding allowance, is the reported bound.
    """
    if eps <= 0:
        raise DomainError("eps must be positive")
    dps = _dps_for(eps)
    with mpmath.workdps(dps):
        sm, xm = _to_mpf(s), _to_mpf(x)
        if sm < s_min:
            raise DomainError(f"quadrature needs s >= {s_min}, got s = {s}")
        if xm <= 0:
            raise DomainError(f"x must be positive, got x = {x}")
        scale = 2 / mpmath.gamma(sm)
        g = _exp_sinh_integrand(sm, xm)

        peak = max(abs(g(mpf(k))) for k in range(-3, 4))
        tiny = peak * mpmath.eps
        lo = _tail_extent(g, -1, tiny) + 1
        hi = _tail_extent(g, +1, tiny) + 1
        tail = (abs(g(mpf(-lo))) + abs(g(mpf(hi)))) * abs(scale)

        total = mpmath.fsum(g(mpf(k)) for k in range(-lo, hi + 1))
        nodes = lo + hi + 1
        estimate = total
        per_unit = 1
        for level in range(1, max_levels + 1):
            per_unit *= 2
            h = mpf(1) / per_unit
            odd = range(-lo * per_unit + 1, hi * per_unit, 2)
            new = mpmath.fsum(g(i * h) for i in odd)
            nodes += len(odd)
            total += new
            refined = h * total
            diff = abs(refined - estimate) * abs(scale)
            estimate = refined
            if nodes > max_nodes:
                raise ToleranceNotMet(f"node budget {max_nodes} exhausted")
            rounding = ROUNDING_ULPS * abs(scale * estimate) * mpmath.eps
            bound = diff + tail + rounding
            if level >= 2 and bound <= eps:
                return ZetaResult(scale * estimate, bound, "quadrature", nodes, s=s, x=x)
    raise ToleranceNotMet(f"quadrature did not reach eps={eps} in {max_levels} refinements")


def zeta_e(
    s: Real,
    x: Real = 1,
    *,
    method: str = "auto",
    eps: float = 1e-12,
) -> ZetaResult:
    """Evaluate zeta_E(s, x) by ``method`` in {auto, exact, series, quadrature}.

    ``auto`` picks the exact path when s is a non-positive integer and the
    accelerated series otherwise.
    """
    sq = Fraction(s) if not isinstance(s, mpf) else None
    is_nonpos_int = sq is not None and sq.denominator == 1 and sq <= 0
    if method == "auto":
        method = "exact" if is_nonpos_int else "series"
    if method == "exact":
        if not is_nonpos_int:
            raise DomainError(f"exact values exist only at s = 0, -1, -2, ...; got s = {s}")
        try:
            xq = Fraction(x) if not isinstance(x, mpf) else None
        except (ValueError, TypeError):
            xq = None
        if xq is None:
            raise DomainError(f"exact evaluation needs a rational x, got {x!r}")
        val = zeta_e_exact(-int(sq), xq)
        return ZetaResult(
            _to_mpf(val), mpf(0), "exact-negative", 0, s=int(sq), x=xq, exact=val
        )
    if method == "series":
        return zeta_e_series(s, x, eps)
    if method == "quadrature":
        return zeta_e_integral(s, x, eps)
    raise ValueError(f"unknown method {method!r}")


_REMARK_SERIES = {
    0: "2(1-1+1-1+...)",
    1: "2(1-2+3-4+...)",
    2: "2(1^2-2^2+3^2-4^2+...)",
}


def remark_table() -> list[tuple[int, Fraction, str]]:
    """Rows (n, zeta_E(-n) = E_n(1), divergent series it assigns a value to)."""
    return [(n, zeta_e_exact(n, 1), desc) for n, desc in _REMARK_SERIES.items()]
