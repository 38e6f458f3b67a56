"""Dirichlet characters stored as exact value tables.

A value is either ``None`` (the residue is not a unit) or a reduced pair
``(q, e)`` standing for exp(2*pi*i*e/q) with ``0 <= e < q``.  The real
values are ``(1, 0) == 1`` and ``(2, 1) == -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .arith import divisors, is_fundamental_discriminant, is_squarefree, kronecker

Root = tuple[int, int]
Value = Optional[Root]

ONE: Root = (1, 0)
MINUS_ONE: Root = (2, 1)

__all__ = [
    "DirichletCharacter",
    "from_kronecker",
    "kronecker_character",
    "principal",
    "multiply",
    "psi_tN",
    "almost_equal",
    "is_real",
    "character_from_config",
]


def _root(q: int, e: int) -> Root:
    e %= q
    g = math.gcd(e, q)
    return (q // g, e // g) if e else ONE


def _root_mul(a: Root, b: Root) -> Root:
    q = a[0] * b[0] // math.gcd(a[0], b[0])
    return _root(q, a[1] * (q // a[0]) + b[1] * (q // b[0]))


def _from_int(v: int) -> Value:
    if v == 0:
        return None
    if v == 1:
        return ONE
    if v == -1:
        return MINUS_ONE
    raise ValueError(f"not a real character value: {v}")


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    values: tuple[Value, ...]
    conductor: int = field(init=False, compare=False)

    def __post_init__(self):
        N = self.modulus
        if N < 1 or len(self.values) != N:
            raise ValueError(f"value table of length {len(self.values)} for modulus {N}")
        vals = tuple(None if v is None else _root(*v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for a, v in enumerate(vals):
            if (v is None) != (math.gcd(a, N) > 1):
                raise ValueError(f"zero pattern wrong at residue {a} mod {N}")
        if vals[1 % N] != ONE:
            raise ValueError("character must send 1 to 1")
        object.__setattr__(self, "conductor", self._compute_conductor())

    def __call__(self, n: int) -> Value:
        return self.values[n % self.modulus]

    def value(self, n: int) -> Union[int, complex]:
        """Numeric value at ``n``: an int for real values, else a complex float."""
        v = self(n)
        if v is None:
            return 0
        if v == ONE:
            return 1
        if v == MINUS_ONE:
            return -1
        return complex(np.exp(2j * np.pi * v[1] / v[0]))

    def real_table(self) -> np.ndarray:
        """Values as an int8 array indexed by residue; requires a real character."""
        if not is_real(self):
            raise ValueError("character is not real")
        return np.array([0 if v is None else (1 if v == ONE else -1) for v in self.values], dtype=np.int8)

    def is_principal(self) -> bool:
        return all(v is None or v == ONE for v in self.values)

    def _compute_conductor(self) -> int:
        N = self.modulus
        units = [a for a in range(N) if self.values[a] is not None]
        for c in divisors(N):
            seen: dict[int, Root] = {}
            for a in units:
                v = self.values[a]
                if seen.setdefault(a % c, v) != v:
                    break
            else:
                return c
        return N

    def primitive(self) -> "DirichletCharacter":
        """The primitive character mod the conductor inducing this one."""
        c, N = self.conductor, self.modulus
        vals: list[Value] = []
        for a in range(c):
            if math.gcd(a, c) > 1:
                vals.append(None)
                continue
            b = a
            while math.gcd(b, N) > 1:
                b += c
            vals.append(self.values[b % N])
        return DirichletCharacter(c, tuple(vals))


def principal(N: int = 1) -> DirichletCharacter:
    return DirichletCharacter(N, tuple(ONE if math.gcd(a, N) == 1 else None for a in range(N)))


def kronecker_character(m: int, modulus: Optional[int] = None) -> DirichletCharacter:
    """d -> (m/d) for any nonzero ``m``; default modulus |m| for m = 0, 1 (mod 4), else 4|m|."""
    if m == 0:
        raise ValueError("Kronecker character of 0 is undefined")
    period = abs(m) if m % 4 in (0, 1) else 4 * abs(m)
    if modulus is None:
        modulus = period
    elif modulus % period:
        raise ValueError(f"modulus {modulus} is not a period of (m/.) for m={m}")
    vals = []
    for a in range(modulus):
        if math.gcd(a, modulus) > 1:
            vals.append(None)
        else:
            vals.append(_from_int(kronecker(m, a if a else modulus)))
    return DirichletCharacter(modulus, tuple(vals))


def from_kronecker(D: int) -> DirichletCharacter:
    """The quadratic character chi_D = (D/.) of modulus |D|."""
    if not is_fundamental_discriminant(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    if D == 1:
        return principal(1)
    return kronecker_character(D, abs(D))


def _extend(chi: DirichletCharacter, M: int) -> list[Value]:
    return [None if math.gcd(a, M) > 1 else chi(a) for a in range(M)]


def multiply(chi1: DirichletCharacter, chi2: DirichletCharacter) -> DirichletCharacter:
    M = math.lcm(chi1.modulus, chi2.modulus)
    vals = [
        None if v1 is None or v2 is None else _root_mul(v1, v2)
        for v1, v2 in zip(_extend(chi1, M), _extend(chi2, M))
    ]
    return DirichletCharacter(M, tuple(vals))


def psi_tN(psi: DirichletCharacter, t: int, k: int) -> DirichletCharacter:
    """d -> psi(d) * (((-1)**k t) / d)."""
    if t < 1 or not is_squarefree(t):
        raise ValueError(f"t must be a squarefree positive integer, got {t}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    m = -t if k % 2 else t
    return multiply(psi, kronecker_character(m, 4 * t))


def almost_equal(chi1: DirichletCharacter, chi2: DirichletCharacter) -> bool:
    """Agreement at all primes not dividing either conductor.

    Checked on the residue classes mod lcm of the conductors that are prime
    to both conductors; each such class contains infinitely many primes.
    """
    p1, p2 = chi1.primitive(), chi2.primitive()
    m1, m2 = p1.modulus, p2.modulus
    M = math.lcm(m1, m2)
    return all(p1(a) == p2(a) for a in range(M) if math.gcd(a, m1 * m2) == 1)


def is_real(chi: DirichletCharacter) -> bool:
    return all(v is None or v[0] <= 2 for v in chi.values)


def character_from_config(config: dict) -> DirichletCharacter:
    """Build a character from ``{"kronecker": D}`` or ``{"modulus": N, "values": [...]}``.

    ``{"kronecker": D}`` accepts any nonzero D; a fundamental D gives chi_D.
    An optional ``"modulus"`` next to ``"kronecker"`` extends the character.
    """
    if "kronecker" in config:
        D = int(config["kronecker"])
        mod = config.get("modulus")
        if D == 1:
            return principal(int(mod) if mod else 1)
        if mod is None and is_fundamental_discriminant(D):
            return from_kronecker(D)
        if mod is not None and is_fundamental_discriminant(D):
            return multiply(from_kronecker(D), principal(int(mod)))
        return kronecker_character(D, None if mod is None else int(mod))
    if "modulus" in config and "values" in config:
        vals: list[Value] = []
        for v in config["values"]:
            if v == 0 or v is None:
                vals.append(None)
            elif isinstance(v, Sequence) and len(v) == 2:
                vals.append((int(v[0]), int(v[1])))
            else:
                raise ValueError(f"bad character value {v!r}; expected 0 or [q, e]")
        return DirichletCharacter(int(config["modulus"]), tuple(vals))
    raise ValueError("character literal needs 'kronecker' or 'modulus' + 'values'")
