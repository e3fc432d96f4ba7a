"""Exact scalars: arbitrary-precision integers, rationals, and the real
quadratic ring Q(sqrt(p)).

Integers are Python ints and rationals are fractions.Fraction (always in
lowest terms with positive denominator), so the only custom scalar is
QuadExt: a number a + b*sqrt(p) with rational a, b and a fixed prime
radicand p.  Values with different radicands never combine; the sign of a
nonzero element is decided exactly by comparing a^2 against b^2*p (sqrt(p)
is irrational for prime p), never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt


class RadicandMismatchError(ValueError):
    """Arithmetic attempted between Q(sqrt(p)) elements with different p."""


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n, by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [i for i in range(n + 1) if sieve[i]]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadExt:
    """a + b*sqrt(p) with exact rational parts and prime radicand p."""

    a: Fraction
    b: Fraction
    p: int

    def __post_init__(self):
        object.__setattr__(self, "a", _to_fraction(self.a))
        object.__setattr__(self, "b", _to_fraction(self.b))
        if not is_prime(self.p):
            raise ValueError(f"radicand {self.p} is not prime")

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.p != self.p:
                raise RadicandMismatchError(
                    f"cannot combine sqrt({self.p}) with sqrt({other.p})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(_to_fraction(other), Fraction(0), self.p)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # (a + b sqrt p)(c + d sqrt p) = (ac + bdp) + (ad + bc) sqrt p
        return QuadExt(
            self.a * o.a + self.b * o.b * self.p,
            self.a * o.b + self.b * o.a,
            self.p,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.p)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = QuadExt(Fraction(1), Fraction(0), self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            # distinct radicands never represent the same irrational number;
            # rationals (b == 0) are radicand-independent
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (self.a, self.b, self.p) == (other.a, other.b, other.p)
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.p))

    # -- exact sign and comparisons ----------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1} of the real number a + b*sqrt(p)."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the term with larger square magnitude wins
        lhs = self.a * self.a
        rhs = self.b * self.b * self.p
        if lhs > rhs:
            return sa
        if lhs < rhs:
            return sb
        # a^2 = b^2 p with a, b nonzero would make sqrt(p) rational
        raise ArithmeticError(f"sqrt({self.p}) is rational?  {self!r}")

    def is_rational(self) -> bool:
        return self.b == 0

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() >= 0

    # -- rendering ----------------------------------------------------------

    def floor_scaled(self, scale: int = 1) -> int:
        """Exact floor(self * scale) for a positive integer scale."""
        A = self.a * scale
        B = self.b * scale
        if B == 0:
            return A.numerator // A.denominator
        # floor of B*sqrt(p): irrational, so the negative case shifts by one
        t = B * B * self.p
        r = isqrt(t.numerator // t.denominator)
        f = r if B > 0 else -r - 1
        m = A.numerator // A.denominator + f
        # value lies in [m, m + 2); one exact sign test resolves the floor
        if (self * scale - (m + 1)).sign() >= 0:
            m += 1
        return m

    def decimal(self, digits: int = 50) -> str:
        """Truncated decimal rendering (approximation for display only).

        Renders floor(self * 10**digits) / 10**digits exactly.
        """
        scaled = self.floor_scaled(10**digits)
        sign = "-" if scaled < 0 else ""
        ip, fp = divmod(abs(scaled), 10**digits)
        return f"{sign}{ip}.{fp:0{digits}d}" if digits else f"{sign}{ip}"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        surd = f"{self.b}*sqrt({self.p})"
        if self.a == 0:
            return surd
        joiner = " + " if self.b > 0 else " - "
        mag = f"{abs(self.b)}*sqrt({self.p})"
        return f"{self.a}{joiner}{mag}"


def quad_arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    """Dispatch {add, sub, mul} on two Q(sqrt(p)) values (same radicand)."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def half_power(p: int, h: int) -> QuadExt:
    """Exact p**(h/2) as an element of Q(sqrt(p)).

    Even h gives a rational power (negative h gives exact fractions); odd h
    gives p**((h-1)/2) * sqrt(p).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if h % 2 == 0:
        e = h // 2
        val = Fraction(p) ** e
        return QuadExt(val, Fraction(0), p)
    e = (h - 1) // 2
    return QuadExt(Fraction(0), Fraction(p) ** e, p)
