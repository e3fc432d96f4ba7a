"""q-analogues: q-integers, q-factorials, Gaussian binomial coefficients, and
the product expansion underlying the q-binomial theorem.

All results are exact polynomials in q with integer coefficients.  The
Gaussian binomial is computed by exact polynomial division of q-factorials;
the division is asserted exact, which certifies that the quotient lies in
Z[q] rather than assuming it.
"""

from __future__ import annotations

from functools import lru_cache

from . import kernels
from .polyalg import Poly, divide_exact


def q_int(n: int) -> Poly:
    """The q-analogue of n: 1 + q + ... + q**(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError("negative q-integers are not supported")
    return Poly([1] * n)


def q_factorial(n: int) -> Poly:
    """Product of the q-analogues of n, n-1, ..., 1; the empty product is 1."""
    if n < 0:
        raise ValueError("negative q-factorials are not supported")
    out = Poly([1])
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, m: int) -> Poly:
    """Gaussian binomial coefficient as an exact polynomial in q.

    Computed as the quotient of q-factorials; exactness of the division is
    asserted, certifying membership in Z[q].
    """
    if m < 0 or n < 0:
        raise ValueError("arguments must be non-negative")
    if m > n:
        raise ValueError(f"m={m} exceeds n={n}")
    return divide_exact(q_factorial(n), q_factorial(m) * q_factorial(n - m))


@lru_cache(maxsize=None)
def q_binomial_eval(n: int, m: int, q0: int) -> int:
    """Gaussian binomial evaluated at an integer q0 (Horner)."""
    return kernels.horner(q_binomial(n, m).coeffs, q0)


def binomial_product_coeffs(n: int) -> list[Poly]:
    """Expand prod_{i=0}^{n-1} (1 + q**i x) by x-degree.

    Returns [c_0(q), ..., c_n(q)]; each c_j(q) equals the Gaussian binomial
    (n choose j)_q times q**(j(j-1)/2), which the test suite checks
    coefficient by coefficient for the q-binomial theorem.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = [Poly([1])]
    for i in range(n):
        # multiply by (1 + q^i x): new_j = old_j + q^i * old_{j-1}
        new = [out[0]]
        for j in range(1, len(out) + 1):
            prev = out[j - 1].shift(i)  # shift in q by i
            new.append(prev if j == len(out) else out[j] + prev)
        out = new
    return out
