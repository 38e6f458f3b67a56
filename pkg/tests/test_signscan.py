import math
import random
from fractions import Fraction

import pytest

from spinorsign.arith import is_fundamental_discriminant, sieve_primes
from spinorsign.characters import from_kronecker, principal
from spinorsign.errors import RangeError
from spinorsign.shimura import CoefficientSeries
from spinorsign.signscan import (
    detect_sign_changes,
    mertens_quarter_sum,
    partial_sum_linear,
    partial_sum_square,
    scan_square_class,
    split_inert_primes,
)
from spinorsign.spinor import cusp_coefficients_at_prime_squares

DISCS = [D for D in range(-50, 51) if D != 1 and is_fundamental_discriminant(D)]


@pytest.fixture(scope="module")
def q2_series(spinor_set):
    primes = sieve_primes(1000).primes.tolist()
    vals = cusp_coefficients_at_prime_squares(spinor_set, primes)
    vals[1] = Fraction(-1)
    return CoefficientSeries(1, 1, 576, spinor_set.character, vals)


def _series(vals):
    return CoefficientSeries(1, 1, 4, principal(1), vals)


def test_split_inert_examples():
    assert split_inert_primes(-3, -1, 12).primes == (2, 5, 11)
    assert split_inert_primes(-3, 1, 20).primes == (7, 13, 19)
    assert 3 not in split_inert_primes(-3, 1, 100).primes + split_inert_primes(-3, -1, 100).primes


def test_split_inert_errors():
    with pytest.raises(ValueError):
        split_inert_primes(1, 1, 10)
    with pytest.raises(ValueError):
        split_inert_primes(-3, 0, 10)
    with pytest.raises(ValueError):
        split_inert_primes(-3, 1, 1)
    with pytest.raises(ValueError):
        split_inert_primes(20, 1, 100)


def test_partition_of_primes():
    allp = set(sieve_primes(10 ** 4).primes.tolist())
    for D in DISCS:
        sp = set(split_inert_primes(D, 1, 10 ** 4))
        inert = set(split_inert_primes(D, -1, 10 ** 4))
        ram = {p for p in allp if D % p == 0}
        assert not (sp & inert) and not (sp & ram) and not (inert & ram)
        assert sp | inert | ram == allp


def test_density_balance():
    total = len(sieve_primes(10 ** 5).primes)
    for D in DISCS:
        ns = len(split_inert_primes(D, 1, 10 ** 5))
        ni = len(split_inert_primes(D, -1, 10 ** 5))
        assert abs(ns - ni) / total <= 0.1, D


def test_detector_examples():
    assert detect_sign_changes([1, -1]).change_indices == (1,)
    assert detect_sign_changes([1, 0, -1]).count == 0
    assert detect_sign_changes([1, 0, -1]).zero_indices == (2,)
    assert detect_sign_changes([-1] * 30).count == 0
    assert detect_sign_changes([]).count == 0
    assert detect_sign_changes([5]).count == 0
    r = detect_sign_changes([1, -1, 2], [7, 13, 19])
    assert r.first_change_prime == 7
    with pytest.raises(ValueError):
        detect_sign_changes([1, 2], [3])


def _brute_changes(seq):
    out = []
    for i in range(len(seq)):
        for j in range(len(seq)):
            if j == i + 1 and seq[i] * seq[j] < 0:
                out.append(i + 1)
    return tuple(out)


def test_detector_matches_brute_force():
    rng = random.Random(99)
    for _ in range(1000):
        seq = [rng.choice((-1, 0, 1)) for _ in range(rng.randint(0, 100))]
        rep = detect_sign_changes(seq)
        assert rep.change_indices == _brute_changes(seq)
        assert detect_sign_changes([-v for v in seq]).change_indices == rep.change_indices


def test_scan_counterexample_branches(q2_series):
    inert = scan_square_class(q2_series, -3, -1, 100, exclude_divisors_of=576)
    assert inert.count == 0
    assert set(inert.values) == {-1}
    split = scan_square_class(q2_series, -3, 1, 1000, exclude_divisors_of=576)
    assert split.count >= 1
    assert split.meta["epsilon"] == 1


def test_scan_zero_series_and_range():
    zero = _series({p: 0 for p in sieve_primes(200).primes.tolist()})
    assert scan_square_class(zero, 5, 1, 200).count == 0
    with pytest.raises(RangeError):
        scan_square_class(zero, 5, 1, 500)


def test_linear_sum_examples(q2_series):
    zero = _series({p: 0 for p in sieve_primes(100).primes.tolist()})
    assert all(s == 0 for _, s in partial_sum_linear(zero, -3, -1, [10, 50, 100]))
    single = _series({p: int(p == 2) for p in sieve_primes(100).primes.tolist()})
    for x, s in partial_sum_linear(single, -3, -1, [2, 10, 100]):
        assert s == pytest.approx(2 ** -1.5)
    assert partial_sum_linear(single, -3, -1, [1.5]) == [(1.5, 0.0)]


def test_linear_sum_inert_branch_bounded(q2_series):
    xs = [10, 50, 100, 300, 1000]
    curve = partial_sum_linear(q2_series, -3, -1, xs, exclude_divisors_of=576)
    sums = [s for _, s in curve]
    assert all(b <= a for a, b in zip(sums, sums[1:]))
    bound = sum(p ** -1.5 for p in sieve_primes(10 ** 6).primes.tolist())
    assert all(abs(s) <= bound for s in sums)
    oracle = -sum(p ** -1.5 for p in range(5, 1001) if p in sieve_primes(1000) and p % 3 == 2)
    assert sums[-1] == pytest.approx(oracle)


def test_square_sum(q2_series):
    zero = _series({p: 0 for p in sieve_primes(100).primes.tolist()})
    fit = partial_sum_square(zero, 5, 1, [10, 100])
    assert fit.c_hat == 0 and all(s == 0 for _, s in fit.curve)
    inert = partial_sum_square(q2_series, -3, -1, [100, 1000], exclude_divisors_of=576)
    oracle = sum(p ** -2.0 for p in sieve_primes(1000).primes.tolist() if p % 3 == 2 and p > 2)
    assert inert.curve[-1][1] == pytest.approx(oracle)
    assert inert.c_hat < 0.05
    with pytest.raises(ValueError):
        partial_sum_square(q2_series, -3, -1, [100])
    assert partial_sum_square(q2_series, -3, -1, [100], fit=False).c_hat is None


def test_mertens_examples():
    assert mertens_quarter_sum(from_kronecker(5), 5, 1, -1, 10 ** 5) == 0
    assert mertens_quarter_sum(from_kronecker(-4), 5, 1, -1, 1.5) == 0
    val = mertens_quarter_sum(from_kronecker(-4), 5, 1, -1, 10 ** 4)
    oracle = sum(math.log(p) / p for p in sieve_primes(10 ** 4).primes.tolist() if p % 5 in (1, 4) and p % 4 == 3)
    assert val == pytest.approx(oracle)
    with pytest.raises(ValueError):
        mertens_quarter_sum(from_kronecker(-4), 5, 2, -1, 100)
