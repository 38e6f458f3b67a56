"""Command-line entry point: ``spinorsign {theta,counterexample,scan,lift,diag}``.

Exit status: 0 on success, 2 for bad input, 3 when ingested data fails a
consistency check.  ``counterexample`` also exits 1 if one of its
assertions fails, which would mean the computation disagrees with theory.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .arith import sieve_primes
from .characters import character_from_config, from_kronecker, principal
from .errors import ConsistencyError, RangeError
from .formats import (
    curve_to_csv,
    dumps,
    exception_rows_to_csv,
    rational_str,
    report_to_dict,
    series_from_csv,
    series_to_csv,
)
from .quadform import load_form, representation_count, theta_coefficients
from .shimura import CoefficientSeries, cm_vanishing_check, shimura_lift
from .signscan import (
    detect_sign_changes,
    mertens_quarter_sum,
    partial_sum_linear,
    partial_sum_square,
    scan_square_class,
)
from .spinor import (
    SpinorClassSet,
    cusp_coefficient,
    cusp_coefficients_at_prime_squares,
    default_class_set,
    load_class_set,
    spinor_exception_scan,
)


class InputError(Exception):
    pass


def _eps(text: str) -> int:
    table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
    if text not in table:
        raise argparse.ArgumentTypeError(f"epsilon must be + or -, got {text!r}")
    return table[text]


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _thresholds(text: str) -> list[float]:
    try:
        xs = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad threshold list {text!r}") from None
    if any(x <= 0 for x in xs):
        raise argparse.ArgumentTypeError("thresholds must be positive")
    return xs


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _class_set(args) -> SpinorClassSet:
    if getattr(args, "classes", None):
        return load_class_set(args.classes)
    return default_class_set()


def _character(args, S: Optional[SpinorClassSet]):
    if getattr(args, "character", None):
        return character_from_config(json.loads(args.character))
    if S is not None and S.character is not None:
        return S.character
    return principal(1)


def _series(args, prime_bound: Optional[int] = None, n_max: Optional[int] = None) -> CoefficientSeries:
    """Series from --series CSV, or the cusp series of the class set."""
    if getattr(args, "series", None):
        with open(args.series) as fh:
            values = series_from_csv(fh)
        psi = _character(args, None)
        return CoefficientSeries(args.t, args.k, args.level or psi.modulus, psi, values)
    S = _class_set(args)
    values: dict[int, Fraction] = {1: cusp_coefficient(S, args.t)}
    if n_max:
        values.update({n: cusp_coefficient(S, args.t * n * n) for n in range(2, n_max + 1)})
    if prime_bound and prime_bound >= 2:
        primes = sieve_primes(prime_bound).primes.tolist()
        values.update(cusp_coefficients_at_prime_squares(S, primes, args.t))
    return CoefficientSeries(args.t, args.k, args.level or S.level, _character(args, S), values)


def cmd_theta(args) -> int:
    Q = load_form(args.form)
    rows = ["n,r"] + [f"{n},{r}" for n, r in enumerate(theta_coefficients(Q, args.n_max))]
    _emit("\n".join(rows) + "\n", args.out)
    return 0


def cmd_counterexample(args) -> int:
    S = _class_set(args)
    N = S.level
    chi = from_kronecker(args.disc)
    base = cusp_coefficient(S, 1)
    counts = [representation_count(K, 1) for K in S.forms]
    base_by_class = {Q.name or f"class_{i}": counts[i] - S.average(counts) for i, Q in enumerate(S.forms)}

    def inert(p):
        return chi.value(p) == -1

    rows, _ = spinor_exception_scan(S, 1, args.prime_bound, inert)
    checked = [r for r in rows if N % r.p]
    constant = all(r.a_f == base for r in checked)
    inert_report = detect_sign_changes([r.a_f for r in checked], [r.p for r in checked])

    split_bound = args.split_bound or args.prime_bound
    split_primes = [p for p in sieve_primes(max(split_bound, 2)).primes_upto(split_bound).tolist()
                    if chi.value(p) == 1 and N % p]
    split_vals = cusp_coefficients_at_prime_squares(S, split_primes)
    split_report = detect_sign_changes([split_vals[p] for p in split_primes], split_primes)

    checks = {
        "base_nonzero": base != 0,
        "inert_constant": constant,
        "inert_no_sign_change": inert_report.count == 0,
    }
    if args.format == "csv":
        _emit(exception_rows_to_csv(rows, len(S.classes)), args.out)
    else:
        result = {
            "level": N,
            "disc": args.disc,
            "a_f_1": {name: rational_str(v) for name, v in base_by_class.items()},
            "distinguished": S.form.name,
            "inert": [
                {
                    "p": r.p,
                    "class_counts": list(r.class_counts),
                    "r_spn": rational_str(r.r_spn),
                    "a_f": rational_str(r.a_f),
                    "stable": r.stable,
                    "checked": bool(N % r.p),
                }
                for r in rows
            ],
            "inert_sign_changes": inert_report.count,
            "split_bound": split_bound,
            "split_sign_changes": split_report.count,
            "split_first_change_prime": split_report.first_change_prime,
            "checks": checks,
        }
        _emit(dumps(result), args.out)
    for name, ok in checks.items():
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=sys.stderr)
    print(f"split-branch sign changes up to {split_bound}: {split_report.count}", file=sys.stderr)
    return 0 if all(checks.values()) else 1


def cmd_scan(args) -> int:
    series = _series(args, prime_bound=args.prime_bound)
    report = scan_square_class(series, args.disc, args.eps, args.prime_bound, args.exclude_level)
    _emit(dumps(report_to_dict(report)), args.out)
    if args.curves:
        if not args.thresholds:
            raise InputError("--curves needs --thresholds")
        curve = partial_sum_linear(series, args.disc, args.eps, args.thresholds, args.exclude_level)
        Path(args.curves).write_text(curve_to_csv(curve))
    return 0


def cmd_lift(args) -> int:
    series = _series(args, n_max=args.n_max)
    lift = shimura_lift(series, args.n_max)
    _emit(series_to_csv(lift.values), args.out)
    if args.cm_disc is not None:
        rep = cm_vanishing_check(lift, args.cm_disc, args.n_max, args.exclude_level)
        print(f"CM by chi_{args.cm_disc} up to {args.n_max}: violations {list(rep.violations)}", file=sys.stderr)
    return 0


def cmd_diag(args) -> int:
    if args.mertens:
        psi = _character(args, None)
        x = max(args.thresholds) if args.thresholds else 1e6
        value = mertens_quarter_sum(psi, args.disc, args.eps, -1, x)
        out = {"x": x, "sum": value, "ratio_to_log_x": value / math.log(x) if x > 1 else None, "predicted_ratio": 0.25}
        _emit(dumps(out), args.out)
        return 0
    if not args.thresholds or len(args.thresholds) < 2:
        raise InputError("diag needs at least two --thresholds for the growth fit")
    series = _series(args, prime_bound=int(max(args.thresholds)))
    lin = partial_sum_linear(series, args.disc, args.eps, args.thresholds, args.exclude_level)
    sq = partial_sum_square(series, args.disc, args.eps, args.thresholds, args.exclude_level)
    if args.format == "csv":
        if args.out:
            Path(f"{args.out}.linear.csv").write_text(curve_to_csv(lin))
            Path(f"{args.out}.square.csv").write_text(curve_to_csv(sq.curve))
        else:
            sys.stdout.write(curve_to_csv(lin) + "\n" + curve_to_csv(sq.curve))
        print(json.dumps({"c_hat": sq.c_hat}), file=sys.stderr)
    else:
        _emit(dumps({"linear": lin, "square": sq.curve, "c_hat": sq.c_hat}), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), help="output format (default depends on the command)")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--classes", help="class-set JSON (default: shipped Q1/Q2 spinor genus)")
    source.add_argument("--series", help="coefficient series CSV (n,numerator,denominator)")
    source.add_argument("--character", help='Nebentypus literal, e.g. \'{"kronecker": 12}\'')
    source.add_argument("--t", type=_positive, default=1)
    source.add_argument("--k", type=_positive, default=1)
    source.add_argument("--level", type=_positive, help="level N of the series (default: from the class set)")
    source.add_argument("--exclude-level", type=_positive, help="skip primes dividing this integer")

    parser = argparse.ArgumentParser(prog="spinorsign", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theta", parents=[common], help="theta coefficients r(n, Q)")
    p.add_argument("--form", required=True)
    p.add_argument("--n-max", type=_nonnegative, default=10)
    p.set_defaults(func=cmd_theta, default_format="csv")

    p = sub.add_parser("counterexample", parents=[common], help="constant-sign example on the inert branch")
    p.add_argument("--classes")
    p.add_argument("--disc", type=int, default=-3)
    p.add_argument("--prime-bound", type=_positive, default=100)
    p.add_argument("--split-bound", type=_positive)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("scan", parents=[common, source], help="sign changes of a(t p^2) on one branch")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--eps", type=_eps, required=True)
    p.add_argument("--prime-bound", type=_positive, default=1000)
    p.add_argument("--thresholds", type=_thresholds)
    p.add_argument("--curves", help="write the linear partial-sum curve CSV here")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("lift", parents=[common, source], help="t-th Shimura lift coefficients")
    p.add_argument("--n-max", type=_positive, default=50)
    p.add_argument("--cm-disc", type=int)
    p.set_defaults(func=cmd_lift, default_format="csv")

    p = sub.add_parser("diag", parents=[common, source], help="partial-sum growth diagnostics")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--eps", type=_eps, default=1)
    p.add_argument("--thresholds", type=_thresholds)
    p.add_argument("--mertens", action="store_true", help="prime sum of log(p)/p with psi(p) = -eps")
    p.set_defaults(func=cmd_diag)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"error: consistency check failed: {exc}", file=sys.stderr)
        return 3
    except (InputError, RangeError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
