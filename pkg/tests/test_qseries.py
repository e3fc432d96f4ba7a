"""q-analogues against an independent oracle.

The oracle is the q-Pascal recurrence
    (n choose m)_q = (n-1 choose m-1)_q + q^m (n-1 choose m)_q,
built without any polynomial division, so it exercises a different code path
than the factorial-quotient implementation.
"""

from math import comb

import pytest

from ikedalift.polyalg import Poly, eval_poly
from ikedalift.qseries import (
    binomial_product_coeffs,
    q_binomial,
    q_binomial_eval,
    q_factorial,
    q_int,
)


def pascal_q_binomial(n: int, m: int) -> Poly:
    """Oracle: build the Gaussian binomial triangle by the q-Pascal rule."""
    row = [Poly([1])]
    for i in range(1, n + 1):
        new = [Poly([1])]
        for j in range(1, i):
            new.append(row[j - 1] + row[j].shift(j))
        new.append(Poly([1]))
        row = new
    return row[m]


class TestQInt:
    def test_one(self):
        assert q_int(1) == Poly([1])

    def test_three(self):
        assert q_int(3) == Poly([1, 1, 1])

    def test_three_at_two(self):
        assert eval_poly(q_int(3), 2) == 7

    def test_zero(self):
        assert q_int(0).is_zero()

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            q_int(-1)


class TestQFactorial:
    def test_empty_product(self):
        assert q_factorial(0) == Poly([1])

    def test_two(self):
        assert q_factorial(2) == Poly([1, 1])

    def test_three(self):
        # (1+q)(1+q+q^2) expanded by hand
        assert q_factorial(3) == Poly([1, 2, 2, 1])


class TestQBinomial:
    def test_m_zero(self):
        for n in range(8):
            assert q_binomial(n, 0) == Poly([1])

    def test_four_choose_two(self):
        assert q_binomial(4, 2) == Poly([1, 1, 2, 1, 1])

    def test_four_choose_two_at_one(self):
        assert eval_poly(q_binomial(4, 2), 1) == 6

    def test_m_greater_than_n_rejected(self):
        with pytest.raises(ValueError):
            q_binomial(3, 5)

    def test_matches_pascal_oracle(self):
        for n in range(17):
            for m in range(n + 1):
                assert q_binomial(n, m) == pascal_q_binomial(n, m), (n, m)

    def test_symmetry(self):
        for n in range(17):
            for m in range(n + 1):
                assert q_binomial(n, m) == q_binomial(n, n - m)

    def test_classical_limit_at_one(self):
        for n in range(17):
            for m in range(n + 1):
                assert eval_poly(q_binomial(n, m), 1) == comb(n, m)

    def test_nonnegative_coefficients(self):
        for n in range(17):
            for m in range(n + 1):
                assert all(c >= 0 for c in q_binomial(n, m).coeffs)


class TestQBinomialEval:
    def test_four_two_at_two(self):
        assert q_binomial_eval(4, 2, 2) == 35

    def test_top(self):
        assert q_binomial_eval(5, 5, 7) == 1

    def test_two_one_at_three(self):
        assert q_binomial_eval(2, 1, 3) == 4


class TestBinomialProduct:
    def test_single_factor(self):
        assert binomial_product_coeffs(1) == [Poly([1]), Poly([1])]

    def test_two_factors(self):
        # (1+x)(1+qx) = 1 + (1+q)x + q x^2
        assert binomial_product_coeffs(2) == [Poly([1]), Poly([1, 1]), Poly([0, 1])]

    def test_three_factors_x_squared(self):
        assert binomial_product_coeffs(3)[2] == Poly([0, 1, 1, 1])

    def test_identity_up_to_sixteen(self):
        for n in range(1, 17):
            cs = binomial_product_coeffs(n)
            assert len(cs) == n + 1
            for j, cj in enumerate(cs):
                assert cj == q_binomial(n, j).shift(j * (j - 1) // 2), (n, j)
