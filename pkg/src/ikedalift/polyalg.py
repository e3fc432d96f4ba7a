"""Dense univariate polynomials over exact coefficient rings, palindrome
detection, and the Dickson-type transform.

One Poly class serves every coefficient domain used here (int, Fraction,
QuadExt); operations never mutate, so instances may be shared freely.
QuadPoly adds construction-time validation that all coefficients live in a
single Q(sqrt(p)).
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .exactnum import QuadExt, RadicandMismatchError


class InexactDivisionError(ArithmeticError):
    """Polynomial quotient left a remainder where exactness was required."""


class Poly:
    """Dense polynomial; coefficients[i] is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        out = list(self.coeffs)
        for i, c in enumerate(other.coeffs):
            if i < len(out):
                out[i] = out[i] - c
            else:
                out.append(-c)
        return Poly(out)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly(kernels.convolve(self.coeffs, other.coeffs))

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def scale(self, c) -> "Poly":
        """Multiply every coefficient by the scalar c."""
        return Poly([c * x for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero():
            return Poly()
        return Poly([0] * k + self.coeffs)

    def __call__(self, x):
        return kernels.horner(self.coeffs, x)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"Poly({self.coeffs!r})"

    def __str__(self):
        return poly_str(self)


class QuadPoly(Poly):
    """Poly whose coefficients all lie in one Q(sqrt(p))."""

    __slots__ = ("radicand",)

    def __init__(self, coeffs, radicand=None):
        cs = []
        for c in coeffs:
            if isinstance(c, QuadExt):
                if radicand is None:
                    radicand = c.p
                elif c.p != radicand:
                    raise RadicandMismatchError(
                        f"coefficient in sqrt({c.p}) inside a sqrt({radicand}) polynomial"
                    )
                cs.append(c)
            else:
                cs.append(c)
        if radicand is None:
            raise ValueError("radicand undetermined: no QuadExt coefficient given")
        cs = [
            c if isinstance(c, QuadExt) else QuadExt(Fraction(c), Fraction(0), radicand)
            for c in cs
        ]
        super().__init__(cs)
        self.radicand = radicand


def poly_str(poly: Poly, var: str = "x") -> str:
    """Human-readable ascending-exponent rendering, e.g. '1 + q + 2q^2'."""
    if poly.is_zero():
        return "0"
    parts = []
    for e, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        neg = not isinstance(c, QuadExt) and c < 0
        mag = -c if neg else c
        if e == 0:
            term = str(mag)
        else:
            x = var if e == 1 else f"{var}^{e}"
            term = x if mag == 1 else f"{mag}{x}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)


def dickson(i: int, c) -> Poly:
    """The unique polynomial D_i with D_i(x + c/x) = x**i + (c/x)**i.

    Built by the three-term recurrence D_0 = 2, D_1 = y,
    D_i = y*D_{i-1} - c*D_{i-2}; monic of degree i for i >= 1, with integer
    coefficients whenever c is an integer.
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    if i == 0:
        return Poly([2])
    prev, cur = Poly([2]), Poly([0, 1])
    for _ in range(i - 1):
        prev, cur = cur, cur.shift(1) - prev.scale(c)
    return cur


def is_palindromic(poly: Poly) -> bool:
    """True iff the coefficient sequence is symmetric (reciprocal polynomial)."""
    cs = poly.coeffs
    n = len(cs)
    return all(cs[i] == cs[n - 1 - i] for i in range(n // 2))


def expand_product(factors) -> Poly:
    """Exact product of a nonempty list of polynomials."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty factor list")
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def eval_poly(poly: Poly, point):
    """Horner evaluation at an int, Fraction, or QuadExt point."""
    return kernels.horner(poly.coeffs, point)


def divide_exact(num: Poly, den: Poly) -> Poly:
    """Exact quotient num/den over the integers.

    Raises InexactDivisionError if any division step or the remainder fails
    exactness; used where a quotient is asserted to stay in Z[x].
    """
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    d = den.coeffs
    dn = len(d)
    if len(rem) < dn:
        if any(rem):
            raise InexactDivisionError("degree of remainder below divisor")
        return Poly()
    q = [0] * (len(rem) - dn + 1)
    lead = d[-1]
    for i in range(len(q) - 1, -1, -1):
        top = rem[i + dn - 1]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r != 0:
            raise InexactDivisionError(f"leading coefficient {top} not divisible by {lead}")
        q[i] = c
        for j in range(dn):
            rem[i + j] -= c * d[j]
    if any(rem):
        raise InexactDivisionError("nonzero remainder")
    return Poly(q)
