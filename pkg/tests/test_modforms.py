"""Eigenform constructions and coefficient-table validation.

The discriminant form is dual-sourced inside delta() (eta power vs
Eisenstein combination); on top of that, spot values here are hand-derived:
E4 has a(m) = 240*sigma_3(m), and products with the normalized discriminant
give a(2) by a one-step convolution (tau(2) + E-series a(1)).
"""

from fractions import Fraction
from math import gcd

import pytest

from ikedalift.exactnum import primes_upto
from ikedalift.modforms import (
    BUILTIN_WEIGHTS,
    EigenformValidationError,
    FourierSeries,
    UnsupportedWeightError,
    bernoulli,
    delta,
    eigenform,
    eisenstein,
    hecke_eigenvalue_prime,
    load_eigenform,
)


class TestBernoulli:
    def test_base(self):
        assert bernoulli(0) == Fraction(1)

    def test_convention(self):
        assert bernoulli(1) == Fraction(-1, 2)

    def test_small_values(self):
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(4) == Fraction(-1, 30)
        assert bernoulli(6) == Fraction(1, 42)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_vanish(self):
        assert bernoulli(3) == bernoulli(5) == bernoulli(7) == 0


class TestEisenstein:
    def test_weight_four(self):
        e4 = eisenstein(4, 10)
        assert e4.a(0) == 1
        assert e4.a(1) == 240
        # sigma_3(2) = 1 + 8 = 9
        assert e4.a(2) == 240 * 9

    def test_weight_six(self):
        e6 = eisenstein(6, 10)
        assert e6.a(1) == -504
        # sigma_5(3) = 1 + 243
        assert e6.a(3) == -504 * 244

    def test_nonintegral_weight_rejected(self):
        with pytest.raises(ArithmeticError):
            eisenstein(12, 10)

    def test_bad_weight_rejected(self):
        with pytest.raises(ValueError):
            eisenstein(5, 10)


class TestDelta:
    def test_normalization(self):
        d = delta(10)
        assert d.a(0) == 0
        assert d.a(1) == 1

    def test_spot_values(self):
        d = delta(10)
        assert d.a(2) == -24
        assert d.a(3) == 252
        # Hecke relation at 2: tau(4) = tau(2)^2 - 2^11
        assert d.a(4) == (-24) ** 2 - 2**11 == -1472

    def test_dual_construction_to_1000(self):
        # delta() itself asserts the eta-power and Eisenstein constructions
        # agree; reaching truncation 1000 without an error is the check
        d = delta(1000)
        assert d.truncation == 1000
        # hand-derived: tau(1000) = tau(8)*tau(125) with tau(8), tau(125)
        # from the Hecke recursion at 2 and 5
        assert d.a(1000) == 84480 * -359001100500 == -30328412970240000


class TestEigenform:
    def test_weight_twelve_is_delta(self):
        assert eigenform(12, 20).coeffs == delta(20).coeffs

    def test_weight_sixteen_spot(self):
        # one-step convolution: tau(2) + E4 a(1) = -24 + 240
        assert eigenform(16, 10).a(2) == 216

    def test_weight_eighteen_spot(self):
        # tau(2) + E6 a(1) = -24 - 504
        assert eigenform(18, 10).a(2) == -528

    def test_normalized(self):
        for w in BUILTIN_WEIGHTS:
            f = eigenform(w, 10)
            assert f.weight == w
            assert f.a(0) == 0 and f.a(1) == 1

    def test_unsupported_weight(self):
        with pytest.raises(UnsupportedWeightError, match="load_eigenform"):
            eigenform(14, 10)
        with pytest.raises(UnsupportedWeightError):
            eigenform(24, 10)

    def test_deligne_bound_to_500(self):
        for w in BUILTIN_WEIGHTS:
            f = eigenform(w, 500)
            for p in primes_upto(500):
                assert f.a(p) ** 2 <= 4 * p ** (w - 1), (w, p)

    def test_multiplicativity_to_500(self):
        for w in BUILTIN_WEIGHTS:
            f = eigenform(w, 500)
            for m in range(2, 501):
                for m2 in range(2, 500 // m + 1):
                    if gcd(m, m2) == 1:
                        assert f.a(m * m2) == f.a(m) * f.a(m2), (w, m, m2)

    def test_hecke_relations_to_500(self):
        for w in BUILTIN_WEIGHTS:
            f = eigenform(w, 500)
            for p in primes_upto(500):
                e = 2
                while p**e <= 500:
                    assert f.a(p**e) == f.a(p) * f.a(p ** (e - 1)) - p ** (w - 1) * f.a(
                        p ** (e - 2)
                    ), (w, p, e)
                    e += 1


class TestHeckeEigenvaluePrime:
    def test_delta_at_two(self):
        assert hecke_eigenvalue_prime(delta(10), 2) == -24

    def test_weight_eighteen_at_two(self):
        assert hecke_eigenvalue_prime(eigenform(18, 10), 2) == -528

    def test_deligne_guard_passes(self):
        # (-24)^2 = 576 <= 4*2^11 = 8192
        assert hecke_eigenvalue_prime(delta(10), 2) == -24

    def test_corrupt_table_rejected(self):
        fake = FourierSeries(12, (0, 1, 10**9))
        with pytest.raises(EigenformValidationError, match="Deligne"):
            hecke_eigenvalue_prime(fake, 2)

    def test_beyond_truncation_rejected(self):
        with pytest.raises(ValueError):
            hecke_eigenvalue_prime(delta(10), 13)

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            hecke_eigenvalue_prime(delta(10), 6)


def write_table(tmp_path, text, name="form.txt"):
    path = tmp_path / name
    path.write_text(text)
    return path


class TestLoadEigenform:
    def test_accepts_valid_table(self, tmp_path):
        path = write_table(tmp_path, "# weight 12\n1 1\n2 -24\n3 252\n4 -1472\n")
        f = load_eigenform(path, 12)
        assert f.a(2) == -24
        assert f.truncation == 4

    def test_rejects_bad_normalization(self, tmp_path):
        path = write_table(tmp_path, "1 2\n2 -24\n")
        with pytest.raises(EigenformValidationError, match="index 1"):
            load_eigenform(path, 12)

    def test_rejects_multiplicativity_violation(self, tmp_path):
        path = write_table(tmp_path, "1 1\n2 -24\n3 252\n4 -1472\n5 4830\n6 -6000\n")
        with pytest.raises(EigenformValidationError, match="index 6"):
            load_eigenform(path, 12)

    def test_rejects_hecke_violation(self, tmp_path):
        path = write_table(tmp_path, "1 1\n2 -24\n3 252\n4 -1471\n")
        with pytest.raises(EigenformValidationError, match="index 4"):
            load_eigenform(path, 12)

    def test_rejects_deligne_violation(self, tmp_path):
        path = write_table(tmp_path, "1 1\n2 1000000\n")
        with pytest.raises(EigenformValidationError, match="index 2"):
            load_eigenform(path, 12)

    def test_rejects_missing_index_below_largest_prime(self, tmp_path):
        path = write_table(tmp_path, "1 1\n2 -24\n5 4830\n")
        with pytest.raises(EigenformValidationError, match="index 3"):
            load_eigenform(path, 12)

    def test_rejects_non_increasing(self, tmp_path):
        path = write_table(tmp_path, "1 1\n3 252\n2 -24\n")
        with pytest.raises(EigenformValidationError):
            load_eigenform(path, 12)

    def test_rejects_start_above_one(self, tmp_path):
        path = write_table(tmp_path, "2 -24\n3 252\n")
        with pytest.raises(EigenformValidationError):
            load_eigenform(path, 12)

    def test_reports_first_offending_index(self, tmp_path):
        # both index 4 (Hecke) and index 6 (multiplicativity) are wrong;
        # the smaller index must be reported
        path = write_table(
            tmp_path, "1 1\n2 -24\n3 252\n4 -9999\n5 4830\n6 -9999\n"
        )
        with pytest.raises(EigenformValidationError) as info:
            load_eigenform(path, 12)
        assert info.value.index == 4

    def test_round_trip_against_builtin(self, tmp_path):
        f = eigenform(18, 60)
        lines = "\n".join(f"{m} {f.a(m)}" for m in range(1, 61))
        path = write_table(tmp_path, lines + "\n")
        g = load_eigenform(path, 18)
        assert g.coeffs == f.coeffs
