"""
Partial sums over primes
========================

On the branch without sign changes the squared sum converges, so its
slope against log log x is near zero.  On the other branch it keeps growing.
"""

import math

from spinorsign import CoefficientSeries, default_class_set
from spinorsign.arith import sieve_primes
from spinorsign.characters import from_kronecker
from spinorsign.signscan import mertens_quarter_sum, partial_sum_linear, partial_sum_square
from spinorsign.spinor import cusp_coefficients_at_prime_squares

S = default_class_set()
xs = [10 ** 2, 10 ** 3, 10 ** 4, 3 * 10 ** 4]
vals = cusp_coefficients_at_prime_squares(S, sieve_primes(max(xs)).primes.tolist())
series = CoefficientSeries(1, 1, S.level, S.character, vals)

for eps in (-1, 1):
    lin = partial_sum_linear(series, -3, eps, xs, exclude_divisors_of=S.level)
    sq = partial_sum_square(series, -3, eps, xs, exclude_divisors_of=S.level)
    print(f"eps={eps:+d} S(x):", [round(s, 4) for _, s in lin])
    print(f"       T(x):", [round(s, 4) for _, s in sq.curve], "C_hat =", round(sq.c_hat, 4))

# A quarter of the primes satisfy both conditions, so the sum tracks log(x)/4.
for x in (10 ** 4, 10 ** 5, 10 ** 6):
    v = mertens_quarter_sum(from_kronecker(-4), 5, 1, -1, x)
    print(x, round(v, 3), round(math.log(x) / 4, 3))
