"""Integer number theory used throughout the package.

Everything here is exact; the sieve is numpy-backed so that prime sums up
to 10**7 stay cheap.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

__all__ = [
    "PrimeSieve",
    "sieve_primes",
    "factorize",
    "moebius",
    "is_squarefree",
    "kronecker",
    "is_fundamental_discriminant",
    "divisors",
]


class PrimeSieve:
    """Primality table and prime list for all integers up to ``limit``."""

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError(f"sieve limit must be at least 2, got {limit}")
        self.limit = int(limit)
        flags = np.ones(self.limit + 1, dtype=bool)
        flags[:2] = False
        flags[4::2] = False
        for p in range(3, math.isqrt(self.limit) + 1, 2):
            if flags[p]:
                flags[p * p :: 2 * p] = False
        flags.setflags(write=False)
        self._flags = flags
        self.primes = np.flatnonzero(flags).astype(np.int64)
        self.primes.setflags(write=False)

    def __contains__(self, n: int) -> bool:
        return self.is_prime(n)

    def __len__(self) -> int:
        return len(self.primes)

    def is_prime(self, n: int) -> bool:
        if n < 0 or n > self.limit:
            raise ValueError(f"{n} outside sieve range [0, {self.limit}]")
        return bool(self._flags[n])

    def primes_upto(self, x: float) -> np.ndarray:
        """Primes ``p <= x`` as a read-only int64 array."""
        return self.primes[: np.searchsorted(self.primes, x, side="right")]


@lru_cache(maxsize=8)
def sieve_primes(limit: int) -> PrimeSieve:
    return PrimeSieve(limit)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division (desk-scale inputs)."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError(f"moebius is defined for n >= 1, got {n}")
    fac = factorize(n) if n > 1 else {}
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise ValueError(f"is_squarefree expects n >= 1, got {n}")
    return moebius(n) != 0


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n), completely multiplicative in ``n``.

    (D/0) is 1 for D = +-1 and 0 otherwise; (D/-1) is the sign of D;
    (D/2) is 0 for even D and otherwise +1 or -1 as D = +-1 or +-3 (mod 8).
    """
    D, n = int(D), int(n)
    if n == 0:
        return 1 if D in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if D < 0:
            result = -result
    v = (n & -n).bit_length() - 1
    if v:
        if D % 2 == 0:
            return 0
        n >>= v
        if v % 2 and D % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * _jacobi(D, n)


def is_fundamental_discriminant(D: int) -> bool:
    """True for D = 1 and for discriminants of quadratic fields."""
    D = int(D)
    if D == 0:
        return False
    if D == 1:
        return True
    if D % 4 == 1:
        return is_squarefree(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False
