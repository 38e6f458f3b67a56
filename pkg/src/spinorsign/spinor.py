"""Class sets of a spinor genus (or genus) and the theta decomposition.

The class sets are input data: enumerating a genus is not attempted here.
For a form Q in a spinor genus with representatives K, the mass-weighted
average

    r(n, spn Q) = sum_K r(n, K)/|O(K)|  /  sum_K 1/|O(K)|

is the Eisenstein-plus-unary-theta part of theta_Q, and what is left over,
a_f(n, Q) = r(n, Q) - r(n, spn Q), is the cuspidal coefficient.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from .arith import is_squarefree, sieve_primes
from .characters import DirichletCharacter, character_from_config
from .errors import ConsistencyError
from .quadform import (
    TernaryForm,
    automorphism_order,
    form_from_dict,
    level_and_determinant,
    prime_square_counts,
    representation_count,
    theta_coefficients,
)

__all__ = [
    "SpinorClassSet",
    "ThetaDecomposition",
    "ExceptionScanRow",
    "siegel_weil_average",
    "cusp_coefficient",
    "cusp_coefficients_at_prime_squares",
    "decompose_theta",
    "spinor_exception_scan",
    "load_class_set",
    "default_class_set",
]

KINDS = ("spinor-genus", "genus")


@dataclass(frozen=True)
class SpinorClassSet:
    classes: tuple[tuple[TernaryForm, int], ...]
    kind: str = "spinor-genus"
    distinguished: int = 0
    character: Optional[DirichletCharacter] = None

    def __post_init__(self):
        if not self.classes:
            raise ValueError("class set is empty")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not 0 <= self.distinguished < len(self.classes):
            raise ValueError(f"distinguished index {self.distinguished} out of range")
        invariants = {level_and_determinant(Q) for Q, _ in self.classes}
        if len(invariants) > 1:
            raise ValueError(f"classes disagree on (level, determinant): {sorted(invariants)}")
        for Q, aut in self.classes:
            if aut < 1:
                raise ValueError(f"automorphism order of {Q} must be positive")

    @classmethod
    def from_forms(cls, forms: Sequence[TernaryForm], **kwargs) -> "SpinorClassSet":
        """Build a class set, computing each automorphism order."""
        return cls(tuple((Q, automorphism_order(Q)) for Q in forms), **kwargs)

    @property
    def form(self) -> TernaryForm:
        return self.classes[self.distinguished][0]

    @property
    def forms(self) -> list[TernaryForm]:
        return [Q for Q, _ in self.classes]

    @property
    def level(self) -> int:
        return level_and_determinant(self.form)[0]

    @property
    def mass(self) -> Fraction:
        return sum((Fraction(1, aut) for _, aut in self.classes), Fraction(0))

    def average(self, counts: Sequence[int]) -> Fraction:
        """Mass-weighted mean of per-class counts given in class order."""
        total = sum((Fraction(c, aut) for c, (_, aut) in zip(counts, self.classes)), Fraction(0))
        return total / self.mass

    def verify_automorphisms(self) -> None:
        for Q, aut in self.classes:
            actual = automorphism_order(Q)
            if actual != aut:
                raise ConsistencyError(f"{Q}: recorded |O| = {aut}, recomputed {actual}")


def class_set_from_dict(data: dict, verify: bool = True) -> SpinorClassSet:
    if not isinstance(data, dict) or "classes" not in data:
        raise ValueError("class-set file needs a 'classes' list")
    entries = []
    for i, entry in enumerate(data["classes"]):
        Q = form_from_dict(entry)
        if "aut_order" in entry:
            aut = int(entry["aut_order"])
            if verify and automorphism_order(Q) != aut:
                raise ConsistencyError(f"class {i} ({Q}): recorded |O| = {aut} does not match enumeration")
        else:
            aut = automorphism_order(Q)
        entries.append((Q, aut))
    char = data.get("character")
    return SpinorClassSet(
        tuple(entries),
        kind=data.get("kind", "spinor-genus"),
        distinguished=int(data.get("distinguished", 0)),
        character=None if char is None else character_from_config(char),
    )


def load_class_set(path: str | Path, verify: bool = True) -> SpinorClassSet:
    with open(path) as fh:
        return class_set_from_dict(json.load(fh), verify=verify)


def default_class_set(verify: bool = True) -> SpinorClassSet:
    """The two classes Q1, Q2 of their common spinor genus (Q2 distinguished)."""
    text = resources.files("spinorsign").joinpath("data/q1q2_spinor.json").read_text()
    return class_set_from_dict(json.loads(text), verify=verify)


def siegel_weil_average(S: SpinorClassSet, n: int) -> Fraction:
    if not S.classes:
        raise ValueError("class set is empty")
    return S.average([representation_count(Q, n) for Q in S.forms])


def cusp_coefficient(S: SpinorClassSet, n: int) -> Fraction:
    """a_f(n, Q) = r(n, Q) - r(n, spn Q) for the distinguished form Q."""
    if S.kind != "spinor-genus":
        raise ValueError("cusp coefficients need a spinor-genus class set")
    counts = [representation_count(Q, n) for Q in S.forms]
    return counts[S.distinguished] - S.average(counts)


def cusp_coefficients_at_prime_squares(S: SpinorClassSet, primes: Iterable[int], t: int = 1) -> dict[int, Fraction]:
    """a_f(t p^2, Q) for each prime p."""
    if S.kind != "spinor-genus":
        raise ValueError("cusp coefficients need a spinor-genus class set")
    primes = [int(p) for p in primes]
    if t == 1:
        tables = [prime_square_counts(Q, primes) for Q in S.forms]
    else:
        tables = [{p: representation_count(Q, t * p * p) for p in primes} for Q in S.forms]
    out = {}
    for p in primes:
        counts = [tab[p] for tab in tables]
        out[p] = counts[S.distinguished] - S.average(counts)
    return out


@dataclass(frozen=True)
class ThetaDecomposition:
    n_max: int
    theta: tuple[int, ...]
    spinor_part: tuple[Fraction, ...]
    f_part: tuple[Fraction, ...]
    e_part: Optional[tuple[Fraction, ...]] = None
    h_part: Optional[tuple[Fraction, ...]] = None
    source: Optional[TernaryForm] = None

    @property
    def has_genus(self) -> bool:
        return self.e_part is not None


def decompose_theta(
    S_spn: SpinorClassSet, S_gen: Optional[SpinorClassSet], n_max: int
) -> ThetaDecomposition:
    """theta_Q = E + H + f up to q^n_max, with E and H present only given genus data."""
    if S_spn.kind != "spinor-genus":
        raise ValueError("first class set must be a spinor genus")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    thetas = [theta_coefficients(Q, n_max) for Q in S_spn.forms]
    spn = tuple(S_spn.average([th[n] for th in thetas]) for n in range(n_max + 1))
    theta = tuple(thetas[S_spn.distinguished])
    f_part = tuple(r - s for r, s in zip(theta, spn))
    e_part = h_part = None
    if S_gen is not None:
        if S_gen.kind != "genus":
            raise ValueError("second class set must be a genus")
        if level_and_determinant(S_gen.form) != level_and_determinant(S_spn.form):
            raise ValueError("genus and spinor genus disagree on (level, determinant)")
        gen_grams = {Q.gram for Q in S_gen.forms}
        missing = [str(Q) for Q in S_spn.forms if Q.gram not in gen_grams]
        if missing:
            raise ValueError(f"genus class set lacks spinor-genus classes {missing}")
        gen_thetas = [theta_coefficients(Q, n_max) for Q in S_gen.forms]
        e_part = tuple(S_gen.average([th[n] for th in gen_thetas]) for n in range(n_max + 1))
        h_part = tuple(s - e for s, e in zip(spn, e_part))
    return ThetaDecomposition(n_max, theta, spn, f_part, e_part, h_part, S_spn.form)


@dataclass(frozen=True)
class ExceptionScanRow:
    p: int
    class_counts: tuple[int, ...]
    r_spn: Fraction
    a_f: Fraction
    stable: bool


def spinor_exception_scan(
    S: SpinorClassSet,
    t: int,
    prime_bound: int,
    residue_filter: Callable[[int], bool] = lambda p: True,
) -> tuple[list[ExceptionScanRow], bool]:
    """Per-prime check of r(t p^2, K) = r(t, K) across the classes K.

    Returns the rows and whether every row is stable.
    """
    if t < 1 or not is_squarefree(t):
        raise ValueError(f"t must be squarefree and positive, got {t}")
    base = [representation_count(Q, t) for Q in S.forms]
    primes = [p for p in sieve_primes(max(prime_bound, 2)).primes_upto(prime_bound).tolist() if residue_filter(p)]
    if t == 1:
        tables = [prime_square_counts(Q, primes) for Q in S.forms]
    else:
        tables = [{p: representation_count(Q, t * p * p) for p in primes} for Q in S.forms]
    rows = []
    for p in primes:
        counts = tuple(tab[p] for tab in tables)
        avg = S.average(counts)
        rows.append(ExceptionScanRow(p, counts, avg, counts[S.distinguished] - avg, list(counts) == base))
    return rows, all(r.stable for r in rows)
