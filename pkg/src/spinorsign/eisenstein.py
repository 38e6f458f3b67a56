"""Fast exact r(p^2, Q) for the two fixture forms via Eisenstein integers.

Both forms split off a square:

    Q1 = x^2 + 48 (y^2 + 3 z^2)
    Q2 = u^2 + 48 (y^2 + y z + z^2),   u = 2x + z, so u = z (mod 2)

and y^2 + 3z^2, y^2 + yz + z^2 are norms a^2 - ab + b^2 from Z[w] with a
parity condition on b.  The number of a + bw of norm m is 6 g(m), where
g(m) = sum_{d | m} (-3/d).  For m odd a third of them have b even (w permutes
the three nonzero classes mod the inert prime 2); for m even they all do.

For n = p^2, m = (p - u)(p + u)/48 and the two factors share at most a
factor 2, so g(m) factors over a table indexed by integers up to 2p.  That
turns a count over ~p^2 lattice points into ~p/3 table lookups.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .arith import kronecker

__all__ = ["Q1_GRAM", "Q2_GRAM", "supports", "prime_square_counts"]

Q1_GRAM = ((2, 0, 0), (0, 96, 0), (0, 0, 288))
Q2_GRAM = ((8, 0, 4), (0, 96, 48), (4, 48, 98))


def supports(gram) -> bool:
    return tuple(map(tuple, gram)) in (Q1_GRAM, Q2_GRAM)


@lru_cache(maxsize=4)
def _tables(limit: int):
    """g of the 6-free part and the 2-adic valuation, for 0..limit."""
    chi = np.array([kronecker(-3, d) for d in range(3)], dtype=np.int64)
    g = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        c = chi[d % 3]
        if c:
            g[d::d] += c
    core = np.arange(limit + 1, dtype=np.int64)
    v2 = np.zeros(limit + 1, dtype=np.int64)
    core[0] = 1
    for prime in (2, 3):
        while True:
            hit = core % prime == 0
            if not hit.any():
                break
            core[hit] //= prime
            if prime == 2:
                v2[hit] += 1
    return g[core], v2


def prime_square_counts(gram, primes: Sequence[int]) -> np.ndarray:
    """r(p^2, Q) for Q one of the fixture forms and primes p >= 5."""
    gram = tuple(map(tuple, gram))
    if gram not in (Q1_GRAM, Q2_GRAM):
        raise ValueError("fast path only covers the two fixture forms")
    primes = np.asarray(primes, dtype=np.int64)
    if primes.size == 0:
        return np.zeros(0, dtype=np.int64)
    if primes.min() < 5:
        raise ValueError("fast path needs primes p >= 5")
    gcore, v2 = _tables(int(2 * primes.max()))
    is_q1 = gram == Q1_GRAM
    out = np.empty(len(primes), dtype=np.int64)
    for i, p in enumerate(primes.tolist()):
        # 48 | (p - u)(p + u) forces 8 | p - u or 8 | p + u (never both),
        # and 3 not dividing u
        eights = np.arange(8, 2 * p, 8, dtype=np.int64)
        A = np.concatenate([eights, 2 * p - eights])
        A = A[(p - A) % 3 != 0]
        B = 2 * p - A
        e2 = v2[A] + v2[B] - 4
        g = gcore[A] * gcore[B] * (e2 % 2 == 0)
        odd = e2 == 0
        if is_q1:
            # b even: 2 g(m) for odd m, 6 g(m) for even m; plus x = +-p
            out[i] = int(np.where(odd, 2 * g, 6 * g).sum()) + 2
        else:
            # b must be odd like u: 4 g(m) for odd m, none for even m
            out[i] = int((4 * g[odd]).sum())
    return out
