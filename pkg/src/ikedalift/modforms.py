"""Fourier coefficients of level-one elliptic eigenforms.

Built-in weights are exactly those with a one-dimensional cusp space
(12, 16, 18, 20, 22, 26), where the normalized cusp form is automatically a
Hecke eigenform: the weight-12 discriminant form times monomials in the
Eisenstein series E4 and E6.  The discriminant form is built two independent
ways (24th power of the pentagonal-number eta expansion, and
(E4^3 - E6^2)/1728) and the constructions are asserted to agree, so the
root of the data pipeline is its own oracle.  Any other weight enters
through a validated coefficient table on disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from . import kernels
from .exactnum import is_prime


class UnsupportedWeightError(ValueError):
    """Weight without a built-in eigenform construction."""


class EigenformValidationError(Exception):
    """A coefficient table failed structural validation.

    Carries the first offending index in .index.
    """

    def __init__(self, index, message):
        self.index = index
        super().__init__(f"index {index}: {message}")


BUILTIN_WEIGHTS = (12, 16, 18, 20, 22, 26)


@dataclass(frozen=True)
class FourierSeries:
    """Weight plus the coefficient table a(0..N) of a modular form.

    Loaded tables may leave composite indices above the largest listed prime
    unset (None); built-in series are always complete.
    """

    weight: int
    coeffs: tuple

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def a(self, m: int) -> int:
        if m < 0 or m > self.truncation:
            raise ValueError(f"index {m} outside truncation {self.truncation}")
        v = self.coeffs[m]
        if v is None:
            raise ValueError(f"coefficient a({m}) not present in the table")
        return v


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (convention B_1 = -1/2), by the recurrence
    sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(m):
        acc += comb(m + 1, j) * bernoulli(j)
    return -acc / (m + 1)


def _sigma_table(e: int, N: int) -> list[int]:
    """Divisor power sums sigma_e(m) for m = 0..N (index 0 unused)."""
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        de = d**e
        for m in range(d, N + 1, d):
            out[m] += de
    return out


@lru_cache(maxsize=None)
def eisenstein(w: int, N: int) -> FourierSeries:
    """Eisenstein series E_w = 1 - (2w/B_w) sum sigma_{w-1}(m) q^m to m = N.

    Only weights where -2w/B_w is an integer are representable here; E4 and
    E6 (all the construction needs) qualify.
    """
    if w < 4 or w % 2 != 0:
        raise ValueError("weight must be an even integer >= 4")
    c = Fraction(-2 * w) / bernoulli(w)
    if c.denominator != 1:
        raise ArithmeticError(
            f"E_{w} has non-integer coefficients (a(1) = {c}); not representable"
        )
    cval = c.numerator
    sig = _sigma_table(w - 1, N)
    coeffs = [1] + [cval * sig[m] for m in range(1, N + 1)]
    return FourierSeries(w, tuple(coeffs))


def _eta_power_24(nterms: int) -> list[int]:
    """Coefficients 0..nterms-1 of prod_{m>=1} (1 - q^m)^24.

    The base factor is the pentagonal-number expansion
    sum_j (-1)^j q^{j(3j-1)/2} over all integers j; the 24th power is taken
    by repeated squaring of truncated series.
    """
    base = [0] * nterms
    j = 0
    while True:
        placed = False
        for jj in (j, -j) if j else (0,):
            g = jj * (3 * jj - 1) // 2
            if g < nterms:
                base[g] += -1 if jj % 2 else 1
                placed = True
        if not placed:
            break
        j += 1
    p2 = kernels.convolve_trunc(base, base, nterms)
    p4 = kernels.convolve_trunc(p2, p2, nterms)
    p8 = kernels.convolve_trunc(p4, p4, nterms)
    p16 = kernels.convolve_trunc(p8, p8, nterms)
    return kernels.convolve_trunc(p16, p8, nterms)


@lru_cache(maxsize=None)
def delta(N: int) -> FourierSeries:
    """The weight-12 discriminant cusp form to truncation N.

    Computed two independent ways (eta-power and Eisenstein combination) and
    asserted to agree coefficient by coefficient.
    """
    if N < 1:
        raise ValueError("truncation must be positive")
    via_eta = [0] + _eta_power_24(N)

    e4 = list(eisenstein(4, N).coeffs)
    e6 = list(eisenstein(6, N).coeffs)
    e4sq = kernels.convolve_trunc(e4, e4, N + 1)
    e4cb = kernels.convolve_trunc(e4sq, e4, N + 1)
    e6sq = kernels.convolve_trunc(e6, e6, N + 1)
    via_eis = []
    for m in range(N + 1):
        d, r = divmod(e4cb[m] - e6sq[m], 1728)
        if r != 0:
            raise ArithmeticError(f"(E4^3 - E6^2)/1728 not integral at index {m}")
        via_eis.append(d)

    if via_eta != via_eis:
        bad = next(m for m in range(N + 1) if via_eta[m] != via_eis[m])
        raise ArithmeticError(
            f"discriminant constructions disagree at index {bad}: "
            f"{via_eta[bad]} (eta) vs {via_eis[bad]} (Eisenstein)"
        )
    return FourierSeries(12, tuple(via_eta))


# factors of E4 and E6 multiplying delta for each one-dimensional weight
_EIGENFORM_FACTORS = {
    12: (),
    16: (4,),
    18: (6,),
    20: (4, 4),
    22: (4, 6),
    26: (4, 4, 6),
}


@lru_cache(maxsize=None)
def eigenform(w: int, N: int) -> FourierSeries:
    """The unique normalized cusp eigenform of weight w, to truncation N.

    Supported weights are exactly those with a one-dimensional cusp space;
    for anything else, supply a coefficient table via load_eigenform.
    """
    if w not in _EIGENFORM_FACTORS:
        raise UnsupportedWeightError(
            f"no built-in eigenform of weight {w}; supported weights are "
            f"{BUILTIN_WEIGHTS} (use load_eigenform for a coefficient table)"
        )
    coeffs = list(delta(N).coeffs)
    for ew in _EIGENFORM_FACTORS[w]:
        coeffs = kernels.convolve_trunc(coeffs, list(eisenstein(ew, N).coeffs), N + 1)
    return FourierSeries(w, tuple(coeffs))


def hecke_eigenvalue_prime(f: FourierSeries, p: int) -> int:
    """a_f(p) for a normalized eigenform, with the Deligne bound asserted.

    For normalized eigenforms the p-th Fourier coefficient is the p-th Hecke
    eigenvalue.  A Deligne violation signals a corrupt input table.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ap = f.a(p)
    if ap * ap > 4 * p ** (f.weight - 1):
        raise EigenformValidationError(
            p, f"Deligne bound violated: a({p})^2 = {ap * ap} > 4*{p}^{f.weight - 1}"
        )
    return ap


def _check_table(table: dict, w: int) -> None:
    """Structural validation of a coefficient table; raises on the first
    offending index (ascending)."""
    listed_primes = [m for m in table if is_prime(m)]
    max_listed_prime = max(listed_primes, default=0)
    for m in range(1, max_listed_prime + 1):
        if m not in table:
            raise EigenformValidationError(m, "missing index at or below the largest listed prime")
    for m in sorted(table):
        am = table[m]
        if m == 1:
            if am != 1:
                raise EigenformValidationError(1, f"normalization violated: a(1) = {am}")
            continue
        if is_prime(m):
            if am * am > 4 * m ** (w - 1):
                raise EigenformValidationError(
                    m, f"Deligne bound violated: a({m})^2 = {am * am} > 4*{m}^{w - 1}"
                )
            continue
        # smallest prime factor and its full power in m
        p = next(d for d in range(2, isqrt(m) + 1) if m % d == 0)
        u, rest = p, m // p
        while rest % p == 0:
            u *= p
            rest //= p
        if rest > 1:
            # coprime split m = u * rest
            if u in table and rest in table and am != table[u] * table[rest]:
                raise EigenformValidationError(
                    m, f"multiplicativity violated: a({m}) != a({u})*a({rest})"
                )
        else:
            # prime power p^e, e >= 2: Hecke recursion at p
            prev, prev2 = m // p, m // (p * p)
            aprev = table.get(prev)
            aprev2 = 1 if prev2 == 1 else table.get(prev2)
            if p in table and aprev is not None and aprev2 is not None:
                if am != table[p] * aprev - p ** (w - 1) * aprev2:
                    raise EigenformValidationError(
                        m,
                        f"Hecke relation violated: a({m}) != "
                        f"a({p})a({prev}) - {p}^{w - 1}a({prev2})",
                    )


def load_eigenform(path, w: int) -> FourierSeries:
    """Read a coefficient table ("m a(m)" per line, '#' comments) and
    validate it as a normalized eigenform of weight w.

    Indices must be strictly increasing starting at m = 1; every index up to
    the largest listed prime must be present.  Normalization,
    multiplicativity, Hecke relations at prime powers, and Deligne bounds at
    primes are all checked, and the first offending index is reported.
    """
    table = {}
    last = 0
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EigenformValidationError(lineno, f"unparseable line {lineno}: {raw!r}")
            try:
                m, am = int(parts[0]), int(parts[1])
            except ValueError:
                raise EigenformValidationError(lineno, f"non-integer entry on line {lineno}: {raw!r}")
            if m <= last:
                raise EigenformValidationError(m, f"indices not strictly increasing at {m}")
            if last == 0 and m != 1:
                raise EigenformValidationError(m, "table must start at index 1")
            table[m] = am
            last = m
    if not table:
        raise EigenformValidationError(0, "empty coefficient table")
    _check_table(table, w)
    maxm = max(table)
    coeffs = [0] + [table.get(m) for m in range(1, maxm + 1)]
    return FourierSeries(w, tuple(coeffs))
