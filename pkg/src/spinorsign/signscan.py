"""Split and inert prime sequences, sign-change detection, and prime-sum diagnostics.

Sign changes use the strict definition a(n0) a(n0 + 1) < 0 with 1-based n0;
a zero entry never takes part in a change.  The diagnostic sums are floats
summed in increasing prime order; their summands come from exact values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .arith import sieve_primes
from .characters import DirichletCharacter, from_kronecker, is_real
from .errors import RangeError
from .shimura import CoefficientSeries

__all__ = [
    "PrimeSplitSequence",
    "SignChangeReport",
    "GrowthFit",
    "split_inert_primes",
    "detect_sign_changes",
    "scan_square_class",
    "partial_sum_linear",
    "partial_sum_square",
    "mertens_quarter_sum",
]


def _check_eps(epsilon: int) -> int:
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon}")
    return epsilon


def _chi_on(primes: np.ndarray, chi: DirichletCharacter) -> np.ndarray:
    return chi.real_table()[primes % chi.modulus]


@dataclass(frozen=True)
class PrimeSplitSequence:
    D: int
    epsilon: int
    bound: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)


def split_inert_primes(D: int, epsilon: int, bound: int) -> PrimeSplitSequence:
    """Primes p <= bound with chi_D(p) = epsilon (split for +1, inert for -1)."""
    if D == 1:
        raise ValueError("D = 1 does not define a quadratic field")
    _check_eps(epsilon)
    if bound < 2:
        raise ValueError("bound must be at least 2")
    chi = from_kronecker(D)
    primes = sieve_primes(bound).primes
    sel = primes[_chi_on(primes, chi) == epsilon]
    return PrimeSplitSequence(D, epsilon, bound, tuple(sel.tolist()))


@dataclass(frozen=True)
class SignChangeReport:
    values: tuple[Fraction, ...]
    primes: Optional[tuple[int, ...]] = None
    change_indices: tuple[int, ...] = ()
    zero_indices: tuple[int, ...] = ()
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def count(self) -> int:
        return len(self.change_indices)

    @property
    def first_change_prime(self) -> Optional[int]:
        """The prime at which the first change starts, i.e. p_{n0}."""
        if not self.change_indices or self.primes is None:
            return None
        return self.primes[self.change_indices[0] - 1]


def detect_sign_changes(values: Sequence, primes: Optional[Sequence[int]] = None) -> SignChangeReport:
    vals = tuple(Fraction(v) for v in values)
    if primes is not None and len(primes) != len(vals):
        raise ValueError("primes and values differ in length")
    changes = tuple(i + 1 for i in range(len(vals) - 1) if vals[i] * vals[i + 1] < 0)
    zeros = tuple(i + 1 for i, v in enumerate(vals) if v == 0)
    return SignChangeReport(vals, None if primes is None else tuple(int(p) for p in primes), changes, zeros)


def _selected_primes(D: int, epsilon: int, bound: int, exclude_divisors_of: Optional[int]) -> list[int]:
    if bound < 2:
        return []
    ps = split_inert_primes(D, epsilon, bound).primes
    if exclude_divisors_of:
        ps = tuple(p for p in ps if exclude_divisors_of % p)
    return list(ps)


def _values_at(series: CoefficientSeries, primes: Sequence[int]) -> list[Fraction]:
    missing = [p for p in primes if p not in series.values]
    if missing:
        raise RangeError(f"series lacks a(t p^2) for {len(missing)} primes, first p = {missing[0]}")
    return [series.values[p] for p in primes]


def scan_square_class(
    series: CoefficientSeries,
    D: int,
    epsilon: int,
    prime_bound: int,
    exclude_divisors_of: Optional[int] = None,
) -> SignChangeReport:
    """Sign changes of a(t p^2) along the split (+1) or inert (-1) primes of Q(sqrt D)."""
    primes = _selected_primes(D, epsilon, prime_bound, exclude_divisors_of)
    report = detect_sign_changes(_values_at(series, primes), primes)
    meta = {"t": series.t, "D": D, "epsilon": epsilon, "prime_bound": prime_bound, "exclude": exclude_divisors_of}
    return SignChangeReport(report.values, report.primes, report.change_indices, report.zero_indices, meta)


def _cumulative(primes: list[int], terms: np.ndarray, x_values: Sequence[float]) -> list[tuple[float, float]]:
    csum = np.cumsum(terms) if len(terms) else np.zeros(0)
    out = []
    for x in x_values:
        k = int(np.searchsorted(primes, x, side="right"))
        out.append((x, float(csum[k - 1]) if k else 0.0))
    return out


def partial_sum_linear(
    series: CoefficientSeries,
    D: int,
    epsilon: int,
    x_values: Sequence[float],
    exclude_divisors_of: Optional[int] = None,
) -> list[tuple[float, float]]:
    """S(x) = sum over p <= x with chi_D(p) = epsilon of a(t p^2) / p^(k + 1/2)."""
    if not x_values:
        return []
    primes = _selected_primes(D, epsilon, int(max(x_values)), exclude_divisors_of)
    vals = _values_at(series, primes)
    terms = np.array([float(v) / p ** (series.k + 0.5) for v, p in zip(vals, primes)])
    return _cumulative(primes, terms, x_values)


@dataclass(frozen=True)
class GrowthFit:
    curve: list[tuple[float, float]]
    c_hat: Optional[float]


def partial_sum_square(
    series: CoefficientSeries,
    D: int,
    epsilon: int,
    x_values: Sequence[float],
    exclude_divisors_of: Optional[int] = None,
    fit: bool = True,
) -> GrowthFit:
    """T(x) = sum over p <= x with chi_D(p) = epsilon of a(t p^2)^2 / p^(2k).

    The growth constant is the log log slope between the two largest thresholds.
    """
    if fit and len(x_values) < 2:
        raise ValueError("fitting the log log growth needs at least two thresholds")
    if not x_values:
        return GrowthFit([], None)
    primes = _selected_primes(D, epsilon, int(max(x_values)), exclude_divisors_of)
    vals = _values_at(series, primes)
    # exact square, then one rounding
    terms = np.array([float(v * v / p ** (2 * series.k)) for v, p in zip(vals, primes)])
    curve = _cumulative(primes, terms, x_values)
    c_hat = None
    if fit:
        (x1, t1), (x2, t2) = sorted(curve)[-2:]
        c_hat = (t2 - t1) / (math.log(math.log(x2)) - math.log(math.log(x1)))
    return GrowthFit(curve, c_hat)


def mertens_quarter_sum(psi: DirichletCharacter, D: int, epsilon: int, sign: int, x: float) -> float:
    """Sum of log(p)/p over p <= x with chi_D(p) = epsilon and psi(p) = sign * epsilon.

    When psi, chi_D and psi chi_D are all nonprincipal this grows like log(x)/4.
    """
    if not is_real(psi):
        raise ValueError("psi must be a real character")
    _check_eps(epsilon)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if x < 2:
        return 0.0
    primes = sieve_primes(int(x)).primes
    chi = from_kronecker(D)
    mask = (_chi_on(primes, chi) == epsilon) & (_chi_on(primes, psi) == sign * epsilon)
    p = primes[mask].astype(np.float64)
    return float(np.sum(np.log(p) / p))
