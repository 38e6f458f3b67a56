"""Positive-definite integral ternary quadratic forms.

Forms are stored by their doubled Gram matrix ``G`` (even diagonal), so
``Q(v) = v^T G v / 2`` and cross terms like ``4xz`` are exact.

Enumeration works coordinate by coordinate from the exact LDL^T
decomposition in the order z, y, x: the outer two coordinates are bounded
by Schur complements, and the innermost coordinate is found by solving a
quadratic with integer arithmetic, so no lattice point is lost to rounding.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "TernaryForm",
    "evaluate",
    "representation_count",
    "representation_counts",
    "primitive_representation_count",
    "automorphisms",
    "automorphism_order",
    "level_and_determinant",
    "theta_coefficients",
    "prime_square_counts",
    "load_form",
    "form_from_dict",
    "form_to_dict",
    "vectors_of_norm",
]

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

# rows of (y, z) pairs processed per numpy batch
_BATCH = 1 << 21


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adjugate(m) -> list[list[int]]:
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
            cof[i][j] = (-1) ** (i + j) * minor
    return [[cof[j][i] for j in range(3)] for i in range(3)]


@dataclass(frozen=True)
class TernaryForm:
    gram: Matrix
    name: str = ""

    def __post_init__(self):
        try:
            g = tuple(tuple(int(x) for x in row) for row in self.gram)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"gram must be a 3x3 integer matrix: {exc}") from None
        if len(g) != 3 or any(len(row) != 3 for row in g):
            raise ValueError("gram must be 3x3")
        object.__setattr__(self, "gram", g)
        for i in range(3):
            if g[i][i] % 2:
                raise ValueError(f"gram diagonal entry {i} is odd ({g[i][i]})")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"gram is not symmetric at ({i}, {j})")
        minors = (g[0][0], g[0][0] * g[1][1] - g[0][1] ** 2, _det3(g))
        if min(minors) <= 0:
            raise ValueError(f"gram is not positive definite (leading minors {minors})")

    @classmethod
    def from_coefficients(cls, a, b, c, yz=0, xz=0, xy=0, name="") -> "TernaryForm":
        """Form a x^2 + b y^2 + c z^2 + yz*yz + xz*xz + xy*xy."""
        return cls(((2 * a, xy, xz), (xy, 2 * b, yz), (xz, yz, 2 * c)), name)

    @cached_property
    def G(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    @cached_property
    def det_gram(self) -> int:
        return _det3(self.gram)

    def __str__(self) -> str:
        return self.name or f"Q{self.gram}"


def load_form(path: str | Path) -> TernaryForm:
    with open(path) as fh:
        data = json.load(fh)
    return form_from_dict(data)


def form_from_dict(data: dict) -> TernaryForm:
    if not isinstance(data, dict):
        raise ValueError("form definition must be a JSON object")
    if "gram" not in data:
        raise ValueError("form definition is missing field 'gram'")
    return TernaryForm(data["gram"], str(data.get("name", "")))


def form_to_dict(Q: TernaryForm) -> dict:
    return {"name": Q.name, "gram": [list(r) for r in Q.gram]}


def evaluate(Q: TernaryForm, v: Sequence[int]) -> int:
    g = Q.gram
    s = sum(g[i][j] * v[i] * v[j] for i in range(3) for j in range(3))
    return s // 2


def _coordinate_bound(Q: TernaryForm, i: int, n: int) -> int:
    # max |v_i| over Q(v) <= n is sqrt(2n (G^-1)_ii)
    adj = _adjugate(Q.gram)
    return math.isqrt(2 * n * adj[i][i] // Q.det_gram)


def _yz_points(Q: TernaryForm, n: int):
    """All (y, z) with min_x Q(x, y, z) <= n, as int64 arrays."""
    g = Q.gram
    a = g[0][0]
    # a * (2 * min_x Q) = [y z] S [y z]^T with S the scaled Schur complement
    s11 = a * g[1][1] - g[0][1] ** 2
    s12 = a * g[1][2] - g[0][1] * g[0][2]
    s22 = a * g[2][2] - g[0][2] ** 2
    rhs = 2 * n * a
    zmax = _coordinate_bound(Q, 2, n)
    z = np.arange(-zmax, zmax + 1, dtype=np.int64)
    # s11 y^2 + 2 s12 y z + (s22 z^2 - rhs) <= 0
    disc = s12 * s12 * z * z - s11 * (s22 * z * z - rhs)
    disc = np.maximum(disc, 0)
    root = np.floor(np.sqrt(disc.astype(np.float64))).astype(np.int64) + 1
    lo = np.floor_divide(-s12 * z - root, s11) - 1
    hi = -np.floor_divide(s12 * z - root, s11) + 1
    counts = np.maximum(hi - lo + 1, 0)
    zz = np.repeat(z, counts)
    offsets = np.arange(counts.sum(), dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
    yy = np.repeat(lo, counts) + offsets
    keep = s11 * yy * yy + 2 * s12 * yy * zz + s22 * zz * zz <= rhs
    return yy[keep], zz[keep]


def _isqrt_exact(d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Integer square roots of nonnegative int64 ``d`` and a perfect-square mask."""
    s = np.floor(np.sqrt(d.astype(np.float64))).astype(np.int64)
    s = np.where(s * s > d, s - 1, s)
    s = np.where((s + 1) * (s + 1) <= d, s + 1, s)
    return s, s * s == d


def representation_count(Q: TernaryForm, n: int) -> int:
    """Number of integer vectors v with Q(v) = n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    g = Q.gram
    a = g[0][0]
    ys, zs = _yz_points(Q, n)
    total = 0
    for start in range(0, len(ys), _BATCH):
        y, z = ys[start : start + _BATCH], zs[start : start + _BATCH]
        b = g[0][1] * y + g[0][2] * z
        c = g[1][1] * y * y + 2 * g[1][2] * y * z + g[2][2] * z * z - 2 * n
        disc = b * b - a * c
        ok = disc >= 0
        b, disc = b[ok], disc[ok]
        s, square = _isqrt_exact(disc)
        b, s = b[square], s[square]
        plus = (-b + s) % a == 0
        minus = ((-b - s) % a == 0) & (s > 0)
        total += int(plus.sum()) + int(minus.sum())
    return total


def representation_counts(Q: TernaryForm, ns: Iterable[int]) -> dict[int, int]:
    """``representation_count`` at each index in ``ns``."""
    return {int(n): representation_count(Q, int(n)) for n in ns}


def _vectors_upto(Q: TernaryForm, n_max: int):
    """Yield (x, y, z, Q) int64 array batches for all v with Q(v) <= n_max."""
    g = Q.gram
    a = g[0][0]
    ys, zs = _yz_points(Q, n_max)
    for start in range(0, len(ys), _BATCH // 8):
        y, z = ys[start : start + _BATCH // 8], zs[start : start + _BATCH // 8]
        b = g[0][1] * y + g[0][2] * z
        c = g[1][1] * y * y + 2 * g[1][2] * y * z + g[2][2] * z * z - 2 * n_max
        disc = np.maximum(b * b - a * c, 0)
        s, _ = _isqrt_exact(disc)
        lo = -np.floor_divide(b + s, a)
        hi = np.floor_divide(-b + s, a)
        counts = np.maximum(hi - lo + 1, 0)
        idx = np.repeat(np.arange(len(y)), counts)
        x = np.repeat(lo, counts) + np.arange(counts.sum(), dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
        yv, zv = y[idx], z[idx]
        twice = (
            g[0][0] * x * x + g[1][1] * yv * yv + g[2][2] * zv * zv
            + 2 * (g[0][1] * x * yv + g[0][2] * x * zv + g[1][2] * yv * zv)
        )
        q = twice // 2
        keep = q <= n_max
        yield x[keep], yv[keep], zv[keep], q[keep]


def theta_coefficients(Q: TernaryForm, n_max: int) -> list[int]:
    """r(n, Q) for 0 <= n <= n_max from one sweep over the ellipsoid."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = np.zeros(n_max + 1, dtype=np.int64)
    for _, _, _, q in _vectors_upto(Q, n_max):
        out += np.bincount(q, minlength=n_max + 1)
    return [int(c) for c in out]


def vectors_of_norm(Q: TernaryForm, n: int) -> list[tuple[int, int, int]]:
    found = []
    for x, y, z, q in _vectors_upto(Q, n):
        m = q == n
        found.extend(zip(x[m].tolist(), y[m].tolist(), z[m].tolist()))
    return sorted(found)


def primitive_representation_count(Q: TernaryForm, n: int) -> int:
    """Vectors with Q(v) = n and coprime coordinates."""
    if n < 1:
        raise ValueError("primitive representations need n >= 1")
    total = 0
    for x, y, z, q in _vectors_upto(Q, n):
        m = q == n
        g = np.gcd(np.gcd(x[m], y[m]), z[m])
        total += int((g == 1).sum())
    return total


def _inner(G, u, v) -> int:
    return sum(G[i][j] * u[i] * v[j] for i in range(3) for j in range(3))


def automorphisms(Q: TernaryForm) -> list[np.ndarray]:
    """All U in GL_3(Z) with U^T G U = G, as integer matrices (columns = images of e_i)."""
    G = Q.gram
    candidates = [vectors_of_norm(Q, G[i][i] // 2) for i in range(3)]
    found = []
    for w0 in candidates[0]:
        for w1 in candidates[1]:
            if _inner(G, w0, w1) != G[0][1]:
                continue
            for w2 in candidates[2]:
                if _inner(G, w0, w2) != G[0][2] or _inner(G, w1, w2) != G[1][2]:
                    continue
                U = np.array([w0, w1, w2], dtype=np.int64).T
                if abs(round(np.linalg.det(U))) == 1:
                    found.append(U)
    return found


def automorphism_order(Q: TernaryForm) -> int:
    return len(automorphisms(Q))


def level_and_determinant(Q: TernaryForm) -> tuple[int, int | Fraction]:
    """(level, determinant) with determinant = det(G)/8, the determinant of G/2.

    The determinant is returned as a Fraction only when det(G) is not a
    multiple of 8.  The level is the least N such that N * G^-1 is integral
    with even diagonal.
    """
    det = Q.det_gram
    adj = _adjugate(Q.gram)
    N = 1
    for i, j in product(range(3), repeat=2):
        # N * adj_ij / det must be integral, and even on the diagonal
        need = det * (2 if i == j else 1)
        N = math.lcm(N, need // math.gcd(need, adj[i][j]))
    return N, det // 8 if det % 8 == 0 else Fraction(det, 8)


def prime_square_counts(Q: TernaryForm, primes: Iterable[int]) -> dict[int, int]:
    """r(p^2, Q) for each prime p, using the Eisenstein-norm shortcut when it applies."""
    from . import eisenstein

    primes = [int(p) for p in primes]
    out: dict[int, int] = {}
    fast = [p for p in primes if p >= 5] if eisenstein.supports(Q.gram) else []
    if fast:
        out.update(zip(fast, eisenstein.prime_square_counts(Q.gram, fast).tolist()))
    for p in primes:
        if p not in out:
            out[p] = representation_count(Q, p * p)
    return out
