"""Square-class coefficient series, the t-th Shimura lift and its inverse.

A ``CoefficientSeries`` holds n -> a(t n^2) for one squarefree t; only that
square class ever enters the lift, its Moebius inverse, or the sign scans.
Values are Fractions throughout.  The lift is restricted to real psi_{t,N}:
the sign questions downstream only make sense for real coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .arith import divisors, is_squarefree, moebius, sieve_primes
from .characters import DirichletCharacter, from_kronecker, is_real, principal, psi_tN
from .errors import RangeError

__all__ = [
    "CoefficientSeries",
    "LiftSeries",
    "CMReport",
    "shimura_lift",
    "mobius_invert",
    "twist_series",
    "cm_vanishing_check",
]


def _frac_table(values) -> dict[int, Fraction]:
    if isinstance(values, Mapping):
        items = values.items()
    else:
        items = enumerate(values, start=1)
    return {int(n): Fraction(v) for n, v in items}


def _dense_prefix(values: Mapping[int, Fraction]) -> int:
    n = 0
    while n + 1 in values:
        n += 1
    return n


@dataclass(frozen=True)
class CoefficientSeries:
    t: int
    k: int
    N: int
    psi: DirichletCharacter
    values: Mapping[int, Fraction]

    def __post_init__(self):
        if self.t < 1 or not is_squarefree(self.t):
            raise ValueError(f"t must be squarefree and positive, got {self.t}")
        if self.k < 1 or self.N < 1:
            raise ValueError("k and N must be positive")
        vals = _frac_table(self.values)
        if any(n < 1 for n in vals):
            raise ValueError("series indices start at 1")
        object.__setattr__(self, "values", vals)

    @property
    def n_max(self) -> int:
        """Largest n with a(t m^2) known for every m <= n."""
        return _dense_prefix(self.values)

    @property
    def base(self) -> Fraction:
        return self[1]

    def __getitem__(self, n: int) -> Fraction:
        try:
            return self.values[n]
        except KeyError:
            raise RangeError(f"a(t*{n}^2) is not in the series") from None

    def scaled(self, c) -> "CoefficientSeries":
        return self.with_values({n: c * v for n, v in self.values.items()})

    def with_values(self, values) -> "CoefficientSeries":
        return CoefficientSeries(self.t, self.k, self.N, self.psi, values)


@dataclass(frozen=True)
class LiftSeries:
    """Coefficients a_{f_t}(n) of the weight-2k lift; ``level`` is N/2."""

    values: Mapping[int, Fraction]
    k: int
    level: Fraction
    t: int = 1
    psi: Optional[DirichletCharacter] = None

    def __post_init__(self):
        object.__setattr__(self, "values", _frac_table(self.values))

    @property
    def weight(self) -> int:
        return 2 * self.k

    @property
    def n_max(self) -> int:
        return _dense_prefix(self.values)

    def __getitem__(self, n: int) -> Fraction:
        try:
            return self.values[n]
        except KeyError:
            raise RangeError(f"a_f_t({n}) is not in the lift") from None

    def normalized(self, n: int) -> float:
        """lambda(n) = a(n) / n^(k - 1/2), as a float."""
        return float(self[n]) / n ** (self.k - 0.5)


def _real_psi_tN(psi: DirichletCharacter, t: int, k: int) -> DirichletCharacter:
    chi = psi_tN(psi, t, k)
    if not is_real(chi):
        raise NotImplementedError("only real psi_{t,N} is supported")
    return chi


def shimura_lift(s: CoefficientSeries, n_max: Optional[int] = None) -> LiftSeries:
    """a_{f_t}(n) = sum_{d | n} psi_{t,N}(d) d^(k-1) a(t n^2 / d^2) for n <= n_max."""
    chi = _real_psi_tN(s.psi, s.t, s.k)
    available = s.n_max
    if n_max is None:
        n_max = available
    if n_max > available:
        raise RangeError(f"lift to n = {n_max} needs a(t m^2) for all m <= {n_max}; have up to {available}")
    out = {}
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for d in divisors(n):
            c = chi.value(d)
            if c:
                acc += c * d ** (s.k - 1) * s.values[n // d]
        out[n] = acc
    return LiftSeries(out, s.k, Fraction(s.N, 2), s.t, s.psi)


def mobius_invert(
    L: LiftSeries,
    psi_tN: DirichletCharacter,
    k: int,
    t: int,
    N: Optional[int] = None,
    psi: Optional[DirichletCharacter] = None,
) -> CoefficientSeries:
    """a(t n^2) = sum_{d | n} mu(d) psi_{t,N}(d) d^(k-1) a_{f_t}(n/d)."""
    if not is_real(psi_tN):
        raise NotImplementedError("only real psi_{t,N} is supported")
    n_max = L.n_max
    if n_max < 1:
        raise RangeError("lift series has no coefficients")
    out = {}
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for d in divisors(n):
            c = moebius(d) * psi_tN.value(d)
            if c:
                acc += c * d ** (k - 1) * L.values[n // d]
        out[n] = acc
    N = N if N is not None else int(2 * L.level)
    psi = psi if psi is not None else (L.psi if L.psi is not None else principal(1))
    return CoefficientSeries(t, k, N, psi, out)


def twist_series(L: LiftSeries, chi: DirichletCharacter) -> LiftSeries:
    """Coefficients chi(n) a(n); chi must be real so values stay rational."""
    if not is_real(chi):
        raise NotImplementedError("twisting by a non-real character is not supported")
    vals = {n: chi.value(n) * v for n, v in L.values.items()}
    return LiftSeries(vals, L.k, L.level, L.t, L.psi)


@dataclass(frozen=True)
class CMReport:
    D: int
    bound: int
    checked: tuple[int, ...]
    violations: tuple[int, ...]

    @property
    def compatible(self) -> bool:
        return not self.violations


def cm_vanishing_check(
    L: LiftSeries, D: int, bound: int, exclude_divisors_of: Optional[int] = None
) -> CMReport:
    """Primes p <= bound with chi_D(p) = -1 where a(p) is nonzero."""
    chi = from_kronecker(D)
    checked, bad = [], []
    for p in sieve_primes(max(bound, 2)).primes_upto(bound).tolist():
        if chi.value(p) != -1:
            continue
        if exclude_divisors_of and exclude_divisors_of % p == 0:
            continue
        checked.append(p)
        if L[p] != 0:
            bad.append(p)
    return CMReport(D, bound, tuple(checked), tuple(bad))
