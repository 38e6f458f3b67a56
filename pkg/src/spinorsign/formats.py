"""Lossless text formats: rational strings, series CSV, report JSON."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Mapping, TextIO

from .signscan import SignChangeReport
from .spinor import ExceptionScanRow

__all__ = [
    "rational_str",
    "parse_rational",
    "series_to_csv",
    "series_from_csv",
    "curve_to_csv",
    "report_to_dict",
    "exception_rows_to_csv",
    "dumps",
]


def rational_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def series_to_csv(values: Mapping[int, Fraction]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "numerator", "denominator"])
    for n in sorted(values):
        v = Fraction(values[n])
        w.writerow([n, v.numerator, v.denominator])
    return buf.getvalue()


def series_from_csv(fh: TextIO) -> dict[int, Fraction]:
    reader = csv.DictReader(fh)
    need = {"n", "numerator", "denominator"}
    if reader.fieldnames is None or not need <= {f.strip() for f in reader.fieldnames}:
        raise ValueError(f"series CSV needs columns {sorted(need)}, got {reader.fieldnames}")
    out: dict[int, Fraction] = {}
    for line, row in enumerate(reader, start=2):
        row = {k.strip(): v for k, v in row.items()}
        try:
            n = int(row["n"])
            out[n] = Fraction(int(row["numerator"]), int(row["denominator"]))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"series CSV line {line}: {exc}") from None
    return out


def curve_to_csv(curve: Iterable[tuple[float, float]]) -> str:
    lines = ["x,sum"]
    lines += [f"{x!r},{s!r}" for x, s in curve]
    return "\n".join(lines) + "\n"


def report_to_dict(report: SignChangeReport) -> dict:
    return {
        **{k: v for k, v in report.meta.items()},
        "count": report.count,
        "change_indices": list(report.change_indices),
        "first_change_prime": report.first_change_prime,
        "zero_indices": list(report.zero_indices),
        "primes": None if report.primes is None else list(report.primes),
        "values": [rational_str(v) for v in report.values],
    }


def exception_rows_to_csv(rows: Iterable[ExceptionScanRow], n_classes: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", *[f"r_class_{i}" for i in range(n_classes)], "r_spn", "a_f", "stable"])
    for r in rows:
        w.writerow([r.p, *r.class_counts, rational_str(r.r_spn), rational_str(r.a_f), str(r.stable).lower()])
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
