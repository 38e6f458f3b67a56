"""
Sign changes along split and inert primes
=========================================

Fix a quadratic field Q(sqrt D) and follow a(p^2) along its split primes
and along its inert primes separately.
"""

from spinorsign import CoefficientSeries, default_class_set, scan_square_class, split_inert_primes
from spinorsign.arith import sieve_primes
from spinorsign.spinor import cusp_coefficients_at_prime_squares

S = default_class_set()
bound = 5000
vals = cusp_coefficients_at_prime_squares(S, sieve_primes(bound).primes.tolist())
series = CoefficientSeries(1, 1, S.level, S.character, vals)

print("inert in Q(sqrt -3), first few:", split_inert_primes(-3, -1, 60).primes)

for D in (-3, 5, -4, 8):
    row = []
    for eps in (1, -1):
        rep = scan_square_class(series, D, eps, bound, exclude_divisors_of=S.level)
        row.append(f"eps={eps:+d}: {rep.count:4d} changes (first at {rep.first_change_prime})")
    print(f"D={D:3d}", " | ".join(row))
