"""Command-line interface: ``eulersum [--format plain|json] [--digits N] <command> ...``.

Exit codes: 0 success, 1 verification or tolerance failure, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .errors import DomainError, ToleranceNotMet
from .euler import euler_number, euler_numbers_upto
from .exact import format_rational
from .sums import (
    parity_residual,
    s_sum_closed,
    s_sum_naive,
    t_sum_closed,
    t_sum_expanded,
    t_sum_naive,
    verify_range,
)
from .zeta import remark_table, zeta_e

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DIGITS_ENV = "EULERSUM_DIGITS"
DEFAULT_DIGITS = 15


@dataclass(frozen=True)
class OutputConfig:
    format: str = "plain"
    precision_digits: int = DEFAULT_DIGITS

    def __post_init__(self) -> None:
        if self.format not in ("plain", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.precision_digits < 1:
            raise ValueError("precision_digits must be positive")


class _Usage(Exception):
    pass


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _pos_int(text: str) -> int:
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _number(text: str) -> str:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    return text


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _emit(cfg: OutputConfig, plain: str, doc: Any) -> None:
    if cfg.format == "json":
        print(json.dumps(doc))
    else:
        print(plain)


def cmd_euler(args: argparse.Namespace, cfg: OutputConfig) -> int:
    if args.upto:
        values = [format_rational(v) for v in euler_numbers_upto(args.n)]
        _emit(cfg, " ".join(values), {"n": args.n, "values": values})
    else:
        value = format_rational(euler_number(args.n))
        _emit(cfg, value, {"n": args.n, "value": value})
    return EXIT_OK


def _sum_command(
    cfg: OutputConfig,
    a: int,
    k: int,
    verify: bool,
    closed: Callable[[int, int], Fraction],
    naive: Callable[[int, int], Fraction],
    expanded: Callable[[int, int], Fraction] | None,
    names: tuple[str, str],
) -> int:
    value = closed(a, k)
    doc: dict[str, Any] = {names[0]: a, names[1]: k, "value": format_rational(value)}
    if not verify:
        _emit(cfg, format_rational(value), doc)
        return EXIT_OK

    forms = {"closed": value}
    if expanded is not None:
        forms["expanded"] = expanded(a, k)
    forms["naive"] = naive(a, k)
    ok = len(set(forms.values())) == 1
    doc.update({name: format_rational(v) for name, v in forms.items()})
    doc["verified"] = ok
    if ok:
        tag = "=".join(forms) if expanded is not None else ""
        plain = f"{format_rational(value)} (verified{': ' + tag if tag else ''})"
    else:
        detail = ", ".join(f"{name}={format_rational(v)}" for name, v in forms.items())
        plain = f"{format_rational(value)} (MISMATCH: {detail})"
    _emit(cfg, plain, doc)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_tsum(args: argparse.Namespace, cfg: OutputConfig) -> int:
    expanded = t_sum_expanded if args.m >= 1 else None
    return _sum_command(cfg, args.m, args.k, args.verify, t_sum_closed, t_sum_naive, expanded, ("m", "k"))


def cmd_ssum(args: argparse.Namespace, cfg: OutputConfig) -> int:
    return _sum_command(cfg, args.n, args.k, args.verify, s_sum_closed, s_sum_naive, None, ("n", "k"))


def cmd_zeta(args: argparse.Namespace, cfg: OutputConfig) -> int:
    res = zeta_e(args.s, args.x, method=args.method, eps=args.eps)
    if res.exact is not None:
        plain = format_rational(res.exact)
    else:
        plain = (
            f"{res.format_value(cfg.precision_digits)} +/- {res.format_bound()}"
            f" ({res.method}, {res.terms_or_nodes} {'terms' if res.method == 'series-accel' else 'nodes'})"
        )
    _emit(cfg, plain, res.to_json(cfg.precision_digits))
    return EXIT_OK


def cmd_remark_table(args: argparse.Namespace, cfg: OutputConfig) -> int:
    rows = remark_table()
    lines = [f"zeta_E({-n}) = {format_rational(v)}    = E_{n}(1), formally {desc}" for n, v, desc in rows]
    doc = [{"n": n, "s": -n, "exact": format_rational(v), "series": desc} for n, v, desc in rows]
    _emit(cfg, "\n".join(lines), doc)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: OutputConfig) -> int:
    reports = verify_range(args.m_max, args.k_max)
    agree = sum(r.all_agree for r in reports)
    first_bad = next((r for r in reports if not r.all_agree), None)

    checked = violations = 0
    first_parity = None
    for m in range(1, args.m_max + 1):
        for k in range(2, args.k_max + 1, 2):
            checked += 1
            if parity_residual(m, k) != 0:
                violations += 1
                if first_parity is None:
                    first_parity = (m, k)

    ok = first_bad is None and violations == 0
    plain = f"{agree}/{len(reports)} agree, parity {violations}/{checked} violations"
    if first_bad is not None:
        plain += f"\nfirst failing (m, k) = ({first_bad.m}, {first_bad.k})"
    if first_parity is not None:
        plain += f"\nfirst parity violation (m, k) = {first_parity}"
    doc = {
        "m_max": args.m_max,
        "k_max": args.k_max,
        "cells": len(reports),
        "agree": agree,
        "parity_checked": checked,
        "parity_violations": violations,
        "first_failure": None if first_bad is None else first_bad.to_json(),
        "ok": ok,
    }
    _emit(cfg, plain, doc)
    return EXIT_OK if ok else EXIT_FAIL


def _median_ns(fn: Callable[[], Fraction], reps: int) -> tuple[int, Fraction]:
    times = []
    value = None
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        value = fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times)), value


def run_bench(m: int, k: int, reps: int) -> dict[str, Any]:
    """Median wall time of naive vs closed-form T_m(k) over ``reps`` runs."""
    naive_ns, naive = _median_ns(lambda: t_sum_naive(m, k), reps)
    closed_ns, closed = _median_ns(lambda: t_sum_closed(m, k), reps)
    return {
        "m": m,
        "k": k,
        "reps": reps,
        "naive_ns": naive_ns,
        "closed_ns": closed_ns,
        "speedup": naive_ns / max(closed_ns, 1),
        "value": format_rational(closed),
        "agree": naive == closed,
    }


def cmd_bench(args: argparse.Namespace, cfg: OutputConfig) -> int:
    res = run_bench(args.m, args.k, args.reps)
    if res["agree"]:
        plain = (
            f"T_{args.m}({args.k}): naive {res['naive_ns'] / 1e6:.3f} ms, "
            f"closed {res['closed_ns'] / 1e6:.3f} ms, speedup {res['speedup']:.1f}x (values agree)"
        )
    else:
        plain = f"T_{args.m}({args.k}): naive and closed forms DISAGREE"
    _emit(cfg, plain, res)
    return EXIT_OK if res["agree"] else EXIT_FAIL


def _default_digits() -> int:
    raw = os.environ.get(DIGITS_ENV)
    if raw is None:
        return DEFAULT_DIGITS
    try:
        v = int(raw)
    except ValueError:
        raise _Usage(f"{DIGITS_ENV} must be a positive integer, got {raw!r}")
    if v < 1:
        raise _Usage(f"{DIGITS_ENV} must be a positive integer, got {raw!r}")
    return v


def build_parser(default_digits: int = DEFAULT_DIGITS) -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default=argparse.SUPPRESS)
    common.add_argument("--digits", type=_pos_int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="eulersum",
        description="Euler numbers, alternating power sums and the Euler-zeta function, in exact arithmetic.",
    )
    parser.add_argument("--format", choices=("plain", "json"), default="plain")
    parser.add_argument("--digits", type=_pos_int, default=default_digits,
                        help=f"decimal places for numeric output (env {DIGITS_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("euler", parents=[common], help="Euler number E_n")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--upto", action="store_true", help="print E_0 .. E_n")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("tsum", parents=[common], help="alternating sum T_m(k) = sum_{l<k} (-1)^l l^m")
    p.add_argument("m", type=_nonneg_int)
    p.add_argument("k", type=_nonneg_int)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_tsum)

    p = sub.add_parser("ssum", parents=[common], help="power sum S_n(k) = sum_{l<k} l^n")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("k", type=_nonneg_int)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_ssum)

    p = sub.add_parser("zeta", parents=[common], help="Euler-zeta function zeta_E(s, x)")
    p.add_argument("s", type=_number)
    p.add_argument("--x", type=_number, default="1")
    p.add_argument("--method", choices=("auto", "exact", "series", "quadrature"), default="auto")
    p.add_argument("--eps", type=_positive_float, default=1e-12)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("remark-table", parents=[common], help="zeta_E(0), zeta_E(-1), zeta_E(-2)")
    p.set_defaults(func=cmd_remark_table)

    p = sub.add_parser("verify", parents=[common], help="closed vs expanded vs naive sums over a grid")
    p.add_argument("--m-max", type=_nonneg_int, required=True)
    p.add_argument("--k-max", type=_nonneg_int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time naive vs closed-form T_m(k)")
    p.add_argument("--m", type=_pos_int, required=True)
    p.add_argument("--k", type=_pos_int, required=True)
    p.add_argument("--reps", type=_pos_int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        default_digits = _default_digits()
    except _Usage as exc:
        print(f"eulersum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(default_digits)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    cfg = OutputConfig(format=args.format, precision_digits=args.digits)
    try:
        return args.func(args, cfg)
    except DomainError as exc:
        print(f"eulersum: domain error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ToleranceNotMet as exc:
        print(f"eulersum: tolerance not met: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
