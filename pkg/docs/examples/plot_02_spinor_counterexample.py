"""
A cusp coefficient that never changes sign on inert primes
==========================================================

Q1 and Q2 make up one spinor genus.  Subtracting the mass-weighted average
from r(n, Q2) leaves the coefficients of a cusp form, and along primes
p = 2 (mod 3) that coefficient at p^2 is stuck at -1.
"""

from spinorsign import cusp_coefficients_at_prime_squares, default_class_set, siegel_weil_average
from spinorsign.arith import sieve_primes
from spinorsign.signscan import detect_sign_changes

S = default_class_set()
print("classes:", [Q.name for Q in S.forms], "distinguished:", S.form.name)
print("r(1, spn) =", siegel_weil_average(S, 1))

primes = [p for p in sieve_primes(200).primes.tolist() if S.level % p]
a = cusp_coefficients_at_prime_squares(S, primes)

inert = [p for p in primes if p % 3 == 2]
split = [p for p in primes if p % 3 == 1]
print("inert:", [(p, int(a[p])) for p in inert[:8]])
print("split:", [(p, str(a[p])) for p in split[:8]])

# The inert values are constant; the split ones wander across zero.
print("changes on inert primes:", detect_sign_changes([a[p] for p in inert]).count)
print("changes on split primes:", detect_sign_changes([a[p] for p in split]).count)
