"""Quadratic-ring arithmetic: exactness, canonical forms, sign determination.

The sign oracle is 100-digit decimal evaluation; ring laws run on 1000
seeded random triples.
"""

import random
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ikedalift.exactnum import (
    QuadExt,
    RadicandMismatchError,
    half_power,
    is_prime,
    primes_upto,
    quad_arith,
)


def q2(a, b):
    return QuadExt(Fraction(a), Fraction(b), 2)


class TestQuadArith:
    def test_square_of_one_plus_sqrt2(self):
        # (1 + sqrt2)^2 = 1 + 2 sqrt2 + 2, expanded by hand
        assert quad_arith(q2(1, 1), q2(1, 1), "mul") == q2(3, 2)

    def test_multiplicative_identity(self):
        x = q2(Fraction(7, 3), Fraction(-5, 2))
        assert quad_arith(x, q2(1, 0), "mul") == x

    def test_additive_inverse(self):
        x = q2(3, 2)
        assert quad_arith(x, x, "sub") == q2(0, 0)

    def test_radicand_mismatch_rejected(self):
        x = QuadExt(Fraction(1), Fraction(1), 2)
        y = QuadExt(Fraction(1), Fraction(1), 3)
        for op in ("add", "sub", "mul"):
            with pytest.raises(RadicandMismatchError):
                quad_arith(x, y, op)

    def test_nonprime_radicand_rejected(self):
        for bad in (1, 4, 6, 9, 12):
            with pytest.raises(ValueError):
                QuadExt(Fraction(1), Fraction(1), bad)

    def test_scalar_coercion(self):
        x = q2(3, 2)
        assert x + 1 == q2(4, 2)
        assert 1 + x == q2(4, 2)
        assert 2 * x == q2(6, 4)
        assert x - Fraction(1, 2) == q2(Fraction(5, 2), 2)
        assert Fraction(1, 2) - x == q2(Fraction(-5, 2), -2)

    def test_ring_laws_thousand_samples(self):
        rng = random.Random(20260810)
        for _ in range(1000):
            p = rng.choice((2, 3, 5, 7, 11, 13))
            x, y, z = (
                QuadExt(
                    Fraction(rng.randint(-99, 99), rng.randint(1, 30)),
                    Fraction(rng.randint(-99, 99), rng.randint(1, 30)),
                    p,
                )
                for _ in range(3)
            )
            assert x + y == y + x
            assert x * y == y * x
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z


class TestSign:
    def test_positive_rational(self):
        assert q2(1, 0).sign() == 1

    def test_rational_part_dominates(self):
        # a^2 = 9 beats b^2 p = 8
        assert q2(-3, 2).sign() == -1

    def test_surd_part_dominates(self):
        # b^2 p = 18 beats a^2 = 4
        assert q2(-2, 3).sign() == 1

    def test_zero_iff_both_parts_zero(self):
        assert q2(0, 0).sign() == 0
        assert q2(0, 1).sign() == 1
        assert q2(0, -1).sign() == -1
        assert q2(-1, 0).sign() == -1

    def test_against_decimal_oracle_seeded(self):
        getcontext().prec = 100
        rng = random.Random(7)
        primes = primes_upto(50)
        for _ in range(1000):
            p = rng.choice(primes)
            a = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            b = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            approx = (
                Decimal(a.numerator) / Decimal(a.denominator)
                + Decimal(b.numerator) / Decimal(b.denominator) * Decimal(p).sqrt()
            )
            want = 0 if approx == 0 else (1 if approx > 0 else -1)
            assert QuadExt(a, b, p).sign() == want

    @given(
        st.fractions(min_value=-1000, max_value=1000, max_denominator=500),
        st.fractions(min_value=-1000, max_value=1000, max_denominator=500),
        st.sampled_from(primes_upto(50)),
    )
    @settings(max_examples=300)
    def test_against_decimal_oracle_hypothesis(self, a, b, p):
        getcontext().prec = 100
        approx = (
            Decimal(a.numerator) / Decimal(a.denominator)
            + Decimal(b.numerator) / Decimal(b.denominator) * Decimal(p).sqrt()
        )
        want = 0 if approx == 0 else (1 if approx > 0 else -1)
        assert QuadExt(a, b, p).sign() == want

    def test_comparisons(self):
        assert q2(768, -512) > 0
        assert q2(768, -512) < q2(768, 512)
        assert q2(0, 1) > Fraction(7, 5)  # sqrt2 > 1.4
        assert q2(0, 1) < Fraction(3, 2)


class TestHalfPower:
    def test_even_exponent(self):
        assert half_power(2, 4) == q2(4, 0)

    def test_odd_exponent(self):
        assert half_power(2, 3) == q2(0, 2)

    def test_negative_odd_exponent(self):
        assert half_power(3, -1) == QuadExt(Fraction(0), Fraction(1, 3), 3)

    def test_product_law(self):
        for p in (2, 7):
            for h1 in range(-40, 41):
                for h2 in range(-40, 41):
                    assert half_power(p, h1) * half_power(p, h2) == half_power(p, h1 + h2)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            half_power(8, 1)


class TestDecimalRendering:
    def test_against_decimal_module(self):
        getcontext().prec = 80
        x = q2(768, -512)
        got = x.decimal(30)
        approx = Decimal(768) - Decimal(512) * Decimal(2).sqrt()
        assert got.startswith("43.9226")
        # truncated rendering differs from the true value by < 10^-30
        assert abs(Decimal(got) - approx) < Decimal(10) ** -30

    def test_rational_value(self):
        assert q2(Fraction(7, 2), 0).decimal(3) == "3.500"

    def test_negative_value(self):
        got = q2(0, -1).decimal(6)
        assert got.startswith("-1.41421")


class TestPrimes:
    def test_is_prime_small(self):
        assert [m for m in range(20) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_sieve_matches_trial_division(self):
        assert primes_upto(200) == [m for m in range(201) if is_prime(m)]
        assert len(primes_upto(1000)) == 168
