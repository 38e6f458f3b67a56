"""
Ternary forms and their theta series
====================================

A form is stored by its doubled Gram matrix, so Q(v) = v^T G v / 2.
"""

import numpy as np
from spinorsign import TernaryForm, automorphism_order, level_and_determinant, theta_coefficients

Q1 = TernaryForm.from_coefficients(1, 48, 144, name="Q1")
Q2 = TernaryForm(((8, 0, 4), (0, 96, 48), (4, 48, 98)), "Q2")

# Both forms share level and determinant, a first hint they are in one genus.
for Q in (Q1, Q2):
    print(Q.name, level_and_determinant(Q), "|O| =", automorphism_order(Q))

# theta coefficients r(n, Q) for n <= 200, one enumeration sweep each
th1 = np.asarray(theta_coefficients(Q1, 200))
th2 = np.asarray(theta_coefficients(Q2, 200))
print("n where the counts differ:", np.nonzero(th1 != th2)[0][:12])

# The familiar sum of three squares, as a sanity check: r(n) for n < 10.
sq = TernaryForm(((2, 0, 0), (0, 2, 0), (0, 0, 2)))
print(list(theta_coefficients(sq, 9)))
