"""Sign changes of a(t p^2) for weight 3/2 cusp forms from ternary quadratic forms."""

from .arith import is_fundamental_discriminant, is_squarefree, kronecker, moebius, sieve_primes
from .characters import DirichletCharacter, almost_equal, from_kronecker, is_real, multiply, principal, psi_tN
from .errors import ConsistencyError, RangeError
from .quadform import (
    TernaryForm,
    automorphism_order,
    evaluate,
    level_and_determinant,
    primitive_representation_count,
    representation_count,
    theta_coefficients,
)
from .shimura import CoefficientSeries, LiftSeries, cm_vanishing_check, mobius_invert, shimura_lift, twist_series
from .signscan import (
    detect_sign_changes,
    mertens_quarter_sum,
    partial_sum_linear,
    partial_sum_square,
    scan_square_class,
    split_inert_primes,
)
from .spinor import (
    SpinorClassSet,
    cusp_coefficient,
    cusp_coefficients_at_prime_squares,
    decompose_theta,
    default_class_set,
    siegel_weil_average,
    spinor_exception_scan,
)

__version__ = "0.1.0"
