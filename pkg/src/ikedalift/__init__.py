"""Exact verification of positivity and sqrt(p)-bounds for Hecke eigenvalues
of Ikeda lifts at primes.

Everything is exact: arbitrary-precision integers and rationals, polynomials
over them, and the real quadratic ring Q(sqrt(p)) with exact sign
determination.  Eigenvalues are computed by three independent formulas whose
agreement is asserted on every run.
"""

from .exactnum import QuadExt, half_power, is_prime, primes_upto, quad_arith
from .ikeda import (
    DeligneBoundError,
    EigenvalueReport,
    IkedaParams,
    RouteDisagreementError,
    deligne_limit,
    eigenvalue_bounds,
    eigenvalue_double_sum,
    eigenvalue_polynomial,
    eigenvalue_product,
    eigenvalue_reciprocal,
    satake_factorization_holds,
    satake_polynomial,
    verify_prime,
)
from .kernels import BACKEND
from .modforms import (
    BUILTIN_WEIGHTS,
    FourierSeries,
    UnsupportedWeightError,
    bernoulli,
    delta,
    eigenform,
    eisenstein,
    hecke_eigenvalue_prime,
    load_eigenform,
)
from .polyalg import Poly, QuadPoly, dickson, eval_poly, expand_product, is_palindromic
from .qseries import (
    binomial_product_coeffs,
    q_binomial,
    q_binomial_eval,
    q_factorial,
    q_int,
)

__version__ = "0.1.0"
