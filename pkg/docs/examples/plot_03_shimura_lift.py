"""
Lifting the square class and checking complex multiplication
============================================================

The t = 1 square class of the cusp series lifts to a weight 2 form.
With Nebentypus (12/.) the lift vanishes at every prime inert in Q(sqrt -3).
"""

from spinorsign import CoefficientSeries, cm_vanishing_check, default_class_set, mobius_invert, shimura_lift
from spinorsign.characters import psi_tN
from spinorsign.spinor import cusp_coefficient

S = default_class_set()
n_max = 40
values = {n: cusp_coefficient(S, n * n) for n in range(1, n_max + 1)}
series = CoefficientSeries(t=1, k=1, N=S.level, psi=S.character, values=values)

lift = shimura_lift(series)
print([str(lift[n]) for n in range(1, 16)])

report = cm_vanishing_check(lift, -3, n_max, exclude_divisors_of=S.level)
print("checked primes:", report.checked, "violations:", report.violations)

# Moebius inversion takes us back exactly.
back = mobius_invert(lift, psi_tN(S.character, 1, 1), 1, 1)
print("roundtrip exact:", dict(back.values) == dict(series.values))
