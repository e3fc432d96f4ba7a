"""Hecke eigenvalues of Ikeda lifts at primes: three independent formulas,
exact structural cross-checks, and exact positivity / sqrt(p)-bound
verification.

The three routes are

  * eigenvalue_double_sum: the explicit double sum in the prime p and the
    elliptic eigenvalue a_f(p), with every half-integer exponent carried as
    a Fraction and asserted integral exactly where integrality is claimed;
  * eigenvalue_product: the closed product over n/2 linear factors
    (a_f(p) + p^(k-i) + p^(k-n-1+i));
  * eigenvalue_reciprocal: evaluation of a monic integer polynomial built
    independently through the Dickson transform of the palindromic degree-n
    polynomial over Q(sqrt(p)).

Every verification asserts the mutual agreement of the routes; Satake
parameters themselves are never represented, so all arithmetic stays in Z,
Q, or Q(sqrt(p)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .exactnum import QuadExt, half_power, is_prime
from .polyalg import Poly, QuadPoly, dickson, eval_poly, expand_product
from .qseries import q_binomial_eval


class RouteDisagreementError(ArithmeticError):
    """The independent eigenvalue formulas returned different values."""


class DeligneBoundError(ValueError):
    """An elliptic coefficient outside the Deligne range was supplied."""


class ExponentIntegralityError(ArithmeticError):
    """An exponent or combinatorial factor claimed integral is not."""


@dataclass(frozen=True)
class IkedaParams:
    """Degree n and weight k of the lift; both even, k > n + 1.

    The elliptic input lives in weight 2k - n, which must be at least 12 for
    a cusp form to exist.
    """

    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError(f"degree n = {self.n} must be an even integer >= 2")
        if self.k % 2 != 0:
            raise ValueError(f"weight k = {self.k} must be even")
        if self.k <= self.n + 1:
            raise ValueError(f"need k > n + 1, got k = {self.k}, n = {self.n}")
        if 2 * self.k - self.n < 12:
            raise ValueError(
                f"elliptic weight 2k - n = {2 * self.k - self.n} is below 12; "
                "no cusp form exists"
            )

    @property
    def eigenform_weight(self) -> int:
        return 2 * self.k - self.n

    @property
    def base_exp(self) -> Fraction:
        """Prefactor exponent nk/2 - n(n+1)/4 (denominator 1 or 2)."""
        return Fraction(self.n * self.k, 2) - Fraction(self.n * (self.n + 1), 4)

    @property
    def double_base_exp(self) -> int:
        """2 * base_exp, always an integer for even n."""
        v = 2 * self.base_exp
        assert v.denominator == 1
        return v.numerator


@dataclass(frozen=True)
class TermExponent:
    """Exponent bookkeeping of one (j, r) term of the double sum."""

    j: int
    r: int
    c_jr: Fraction
    total: Fraction  # base_exp + c_jr; a non-negative integer for valid params


def _as_nonneg_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ExponentIntegralityError(f"{what} = {x} is not an integer")
    if x < 0:
        raise ExponentIntegralityError(f"{what} = {x} is negative")
    return x.numerator


def term_exponents(params: IkedaParams) -> tuple[TermExponent, ...]:
    """All (j, r) exponents of the double sum, integrality-checked."""
    n, k = params.n, params.k
    e0 = params.base_exp
    half = n // 2
    out = []
    for j in range(1, half + 1):
        for r in range(j // 2 + 1):
            c = Fraction(-(half - j) * (half + j) + (j - 2 * r) * (n - 2 * k + 1), 2)
            total = e0 + c
            _as_nonneg_int(total, f"exponent for (j, r) = ({j}, {r})")
            out.append(TermExponent(j, r, c, total))
    return tuple(out)


def tail_exponent(params: IkedaParams) -> int:
    """The exponent base_exp - n^2/8 of the a_f-free term (a non-negative
    integer for valid parameters)."""
    v = params.base_exp - Fraction(params.n**2, 8)
    return _as_nonneg_int(v, "tail exponent")


def deligne_limit(params: IkedaParams, p: int) -> int:
    """Largest integer magnitude admissible for a_f(p) under Deligne:
    floor(2 * p**((2k-n-1)/2))."""
    return isqrt(4 * p ** (2 * params.k - params.n - 1))


# ---------------------------------------------------------------------------
# route 1: explicit double sum
# ---------------------------------------------------------------------------


def eigenvalue_double_sum(params: IkedaParams, p: int, ap: int) -> int:
    """Eigenvalue via the double sum over (j, r) plus the a_f-free term.

    The rational factor j/(j-r) * C(j-r, r) is asserted to be a positive
    integer, and every p-exponent is asserted to be a non-negative integer,
    so the whole computation stays in Z.
    """
    n = params.n
    half = n // 2
    total = 0
    for t in term_exponents(params):
        w = Fraction(t.j, t.j - t.r) * comb(t.j - t.r, t.r)
        if w.denominator != 1 or w <= 0:
            raise ExponentIntegralityError(
                f"combinatorial factor j/(j-r)*C(j-r,r) = {w} for (j, r) = ({t.j}, {t.r})"
            )
        sign = -1 if t.r % 2 else 1
        exp = _as_nonneg_int(t.total, "term exponent")
        total += (
            sign
            * w.numerator
            * q_binomial_eval(n, half - t.j, p)
            * p**exp
            * ap ** (t.j - 2 * t.r)
        )
    total += p ** tail_exponent(params) * q_binomial_eval(n, half, p)
    return total


# ---------------------------------------------------------------------------
# route 2: product over linear factors
# ---------------------------------------------------------------------------


def eigenvalue_product(params: IkedaParams, p: int, ap: int) -> int:
    """Eigenvalue as the product of (a_f(p) + p^(k-i) + p^(k-n-1+i))."""
    n, k = params.n, params.k
    out = 1
    for i in range(1, n // 2 + 1):
        out *= ap + p ** (k - i) + p ** (k - n - 1 + i)
    return out


# ---------------------------------------------------------------------------
# route 3: reciprocal-polynomial construction
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def satake_polynomial(params: IkedaParams, p: int) -> QuadPoly:
    """The degree-n generating polynomial whose normalized value at the
    Satake parameter is the eigenvalue.

    Coefficient i is p^(base_exp + i(i-n)/2) * (n choose i)_p, realized
    exactly in Q(sqrt(p)); the coefficient sequence is palindromic.
    """
    n = params.n
    d = params.double_base_exp
    coeffs = [
        half_power(p, d + i * (i - n)) * q_binomial_eval(n, i, p) for i in range(n + 1)
    ]
    return QuadPoly(coeffs, radicand=p)


@lru_cache(maxsize=None)
def eigenvalue_polynomial(params: IkedaParams, p: int) -> Poly:
    """Monic integer polynomial of degree n/2 sending a_f(p) to the
    eigenvalue, built through the Dickson transform.

    The half-integer power bookkeeping runs in Q(sqrt(p)); every final
    coefficient is asserted to have zero surd part and an integer rational
    part, the result is asserted monic of degree n/2, and it is asserted
    equal to the expanded product of the linear factors of route 2.  Either
    assertion failing indicates an implementation defect.
    """
    n, k = params.n, params.k
    half = n // 2
    d = params.double_base_exp
    c = p ** (2 * k - n - 1)

    center = half_power(p, d + half * (half - n)) * q_binomial_eval(n, half, p)
    acc = Poly([center])
    for i in range(half):
        h = d + i * (i - n) + (2 * k - n - 1) * (i - half)
        scal = half_power(p, h) * q_binomial_eval(n, i, p)
        acc = acc + dickson(half - i, c).scale(scal)

    ints = []
    for j, cq in enumerate(acc.coeffs):
        if not isinstance(cq, QuadExt):
            cq = QuadExt(Fraction(cq), Fraction(0), p)
        if cq.b != 0:
            raise ArithmeticError(f"coefficient {j} has nonzero surd part: {cq}")
        if cq.a.denominator != 1:
            raise ArithmeticError(f"coefficient {j} is not an integer: {cq}")
        ints.append(cq.a.numerator)
    tilde = Poly(ints)

    if tilde.degree != half or not tilde.is_monic():
        raise ArithmeticError(f"expected a monic polynomial of degree {half}: {tilde!r}")
    factors = [
        Poly([p ** (k - i) + p ** (k - n - 1 + i), 1]) for i in range(1, half + 1)
    ]
    if tilde != expand_product(factors):
        raise ArithmeticError("Dickson-transform construction disagrees with the factored form")
    return tilde


def eigenvalue_reciprocal(params: IkedaParams, p: int, ap: int) -> int:
    """Eigenvalue by evaluating the reciprocal-polynomial construction."""
    return eval_poly(eigenvalue_polynomial(params, p), ap)


def satake_factorization_holds(params: IkedaParams, p: int) -> bool:
    """Exact check that the generating polynomial factors as
    p^base_exp * prod_{j=0}^{n-1} (1 + p^(j + (1-n)/2) x) in Q(sqrt(p))."""
    n = params.n
    lhs = satake_polynomial(params, p)
    factors = [
        QuadPoly([1, half_power(p, 2 * j + 1 - n)], radicand=p) for j in range(n)
    ]
    rhs = expand_product(factors).scale(half_power(p, params.double_base_exp))
    return lhs == rhs


# ---------------------------------------------------------------------------
# exact bounds and verification
# ---------------------------------------------------------------------------


def eigenvalue_bounds(params: IkedaParams, p: int) -> tuple[QuadExt, QuadExt]:
    """Exact lower and upper bounds for the eigenvalue at p:
    p^(base_exp + n^2/8) * prod_{i=1}^{n/2} (1 -+ p^-(i-1/2))^2."""
    n = params.n
    base = half_power(p, params.double_base_exp + n * n // 4)
    one = QuadExt(Fraction(1), Fraction(0), p)
    lo, hi = base, base
    for i in range(1, n // 2 + 1):
        u = half_power(p, -(2 * i - 1))
        lo = lo * (one - u) ** 2
        hi = hi * (one + u) ** 2
    return lo, hi


@dataclass(frozen=True)
class EigenvalueReport:
    """Per-prime verification record."""

    p: int
    a_p: int
    eigenvalue: int
    lower: QuadExt
    upper: QuadExt
    positive: bool
    within_bounds: bool
    routes_agree: bool


def verify_prime(params: IkedaParams, p: int, ap: int) -> EigenvalueReport:
    """Compute the eigenvalue by all three routes, assert agreement, and
    check positivity and the exact bounds by quadratic-ring sign tests.

    a_f(p) must satisfy the Deligne bound; anything else is rejected, since
    the positivity statement presumes it.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    w = 2 * params.k - params.n
    if ap * ap > 4 * p ** (w - 1):
        raise DeligneBoundError(
            f"a_f({p}) = {ap} violates the Deligne bound |a| <= 2*{p}^({w - 1}/2)"
        )
    v1 = eigenvalue_double_sum(params, p, ap)
    v2 = eigenvalue_product(params, p, ap)
    v3 = eigenvalue_reciprocal(params, p, ap)
    if not (v1 == v2 == v3):
        raise RouteDisagreementError(
            f"routes disagree at p = {p}, a = {ap}: sum={v1} product={v2} reciprocal={v3}"
        )
    lower, upper = eigenvalue_bounds(params, p)
    positive = v1 > 0
    within = (v1 - lower).sign() >= 0 and (upper - v1).sign() >= 0
    return EigenvalueReport(
        p=p,
        a_p=ap,
        eigenvalue=v1,
        lower=lower,
        upper=upper,
        positive=positive,
        within_bounds=within,
        routes_agree=True,
    )
