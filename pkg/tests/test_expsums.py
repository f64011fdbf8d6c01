import math

import numpy as np
import pytest

from cazac.expsums import (
    char_ambiguity,
    gauss_sum,
    jacobsthal_count,
    kloosterman,
    salie_form,
    weil_audit,
)
from cazac.numtheory import NotOddPrimeError, PrimeContext, legendre

from conftest import brute_kloosterman, odd_primes_up_to


class TestKloosterman:
    def test_trivial_values(self):
        assert kloosterman(0, 0, 5).value == pytest.approx(4.0, abs=1e-12)
        assert kloosterman(1, 0, 7).value == pytest.approx(-1.0, abs=1e-12)

    def test_golden_ratio_value(self):
        # inverses mod 5 are 1, 3, 2, 4, so the four terms sum to (3-sqrt(5))/2
        expected = (3.0 - math.sqrt(5.0)) / 2.0
        assert kloosterman(1, 1, 5).value == pytest.approx(expected, abs=1e-12)

    def test_matches_brute_force(self):
        for p in (5, 7, 11, 13):
            for a in range(p):
                for b in range(p):
                    z = brute_kloosterman(a, b, p)
                    assert abs(z.imag) < 1e-10
                    assert kloosterman(a, b, p).value == pytest.approx(z.real, abs=1e-10)

    def test_real_valued_exhaustively(self):
        # the direct complex sums stay real well below the assertion level
        for p in odd_primes_up_to(101):
            for a in range(p):
                for b in range(p):
                    kloosterman(a, b, p)  # internal imag check must not trip

    def test_negation_symmetry(self):
        for p in odd_primes_up_to(31):
            for a in range(p):
                for b in range(p):
                    lhs = kloosterman(a, b, p).value
                    rhs = kloosterman(-a, -b, p).value
                    assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_weil_bound_when_nondegenerate(self):
        for p in odd_primes_up_to(101):
            cap = 2.0 * math.sqrt(p)
            for a in range(1, p):
                assert abs(kloosterman(1, a, p).value) <= cap

    def test_record_fields(self):
        rec = kloosterman(8, -1, 7)
        assert (rec.a, rec.b, rec.p) == (1, 6, 7)

    def test_rejects_bad_modulus(self):
        with pytest.raises(NotOddPrimeError):
            kloosterman(1, 1, 8)


class TestGaussSum:
    def test_known_values(self):
        assert gauss_sum(1, 5) == pytest.approx(math.sqrt(5), abs=1e-10)
        assert gauss_sum(1, 3) == pytest.approx(1j * math.sqrt(3), abs=1e-10)
        assert gauss_sum(2, 5) == pytest.approx(-math.sqrt(5), abs=1e-10)

    def test_closed_form_all_residues(self):
        for p in odd_primes_up_to(101):
            eps = 1.0 if p % 4 == 1 else 1.0j
            sp = math.sqrt(p)
            for a in range(1, p):
                assert gauss_sum(a, p) == pytest.approx(eps * legendre(a, p) * sp, abs=1e-10)

    def test_zero_coefficient(self):
        # tau[0; p] is the plain character sum, which vanishes
        assert abs(gauss_sum(0, 11)) < 1e-12


class TestSalieForm:
    def test_known_values(self):
        expected = 2 * math.cos(4 * math.pi / 7) + 4 * math.cos(2 * math.pi / 7)
        assert salie_form(1, 7) == pytest.approx(expected, abs=1e-12)
        assert salie_form(1, 7) == pytest.approx(kloosterman(1, 1, 7).value, abs=1e-12)
        assert salie_form(1, 5) == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-12)
        assert salie_form(3, 11) == pytest.approx(kloosterman(1, 3, 11).value, abs=1e-9)

    def test_identity_all_residues(self):
        for p in odd_primes_up_to(101):
            for a in range(1, p):
                assert salie_form(a, p) == pytest.approx(
                    kloosterman(1, a, p).value, abs=1e-9
                ), (a, p)

    def test_rejects_divisible_a(self):
        with pytest.raises(ValueError):
            salie_form(0, 7)
        with pytest.raises(ValueError):
            salie_form(14, 7)


class TestJacobsthalCount:
    def test_known_values(self):
        assert jacobsthal_count(2, 1, 7) == 1  # only x = 1 solves x + 1/x = 2
        assert jacobsthal_count(0, 1, 7) == 0  # x^2 = -1 has no root mod 7
        assert jacobsthal_count(3, 1, 7) == 0  # discriminant 5 is a nonresidue

    def test_fiber_count_formula_exhaustive(self):
        for p in odd_primes_up_to(31):
            table = PrimeContext.create(p).legendre_table
            for a in range(1, p):
                for t in range(p):
                    expected = 1 + int(table[(t * t - 4 * a) % p])
                    assert jacobsthal_count(t, a, p) == expected, (t, a, p)

    def test_aggregate_identity_with_random_weights(self):
        # sum_x F[x + a/x] = sum_t F[t] + sum_t chi(t^2 - 4a) F[t] for any F
        rng = np.random.default_rng(5)
        p = 13
        table = PrimeContext.create(p).legendre_table
        for a in range(1, p):
            f = rng.normal(size=p) + 1j * rng.normal(size=p)
            lhs = sum(f[(x + a * pow(x, p - 2, p)) % p] for x in range(1, p))
            rhs = f.sum() + sum(int(table[(t * t - 4 * a) % p]) * f[t] for t in range(p))
            assert abs(lhs - rhs) < 1e-10

    def test_rejects_divisible_a(self):
        with pytest.raises(ValueError):
            jacobsthal_count(1, 0, 7)


class TestCharAmbiguity:
    def test_methods_agree_at_single_point(self):
        d = char_ambiguity(7, 1, 1, "direct")
        k = char_ambiguity(7, 1, 1, "kloosterman")
        assert abs(d - k) < 1e-10

    def test_methods_agree_on_grids(self):
        for p in odd_primes_up_to(31):
            for m in range(1, p):
                for n in range(1, p):
                    d = char_ambiguity(p, m, n, "direct")
                    k = char_ambiguity(p, m, n, "kloosterman")
                    assert abs(d - k) < 1e-10, (p, m, n)

    def test_weil_bound_and_rotated_realness_sampled(self):
        rng = np.random.default_rng(11)
        for p in (37, 61, 101):
            cap = 2.0 / math.sqrt(p)
            for _ in range(25):
                m = int(rng.integers(1, p))
                n = int(rng.integers(1, p))
                z = char_ambiguity(p, m, n)
                assert abs(z) <= cap
                rot = np.exp(-1j * np.pi * ((m * n) % (2 * p)) / p)
                assert abs((rot * z).imag) < 1e-10

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            char_ambiguity(7, 0, 1)
        with pytest.raises(ValueError):
            char_ambiguity(7, 1, 7)
        with pytest.raises(ValueError):
            char_ambiguity(7, 1, 1, method="fft")


class TestWeilAudit:
    def test_small_primes(self):
        for p in (5, 7, 101):
            audit = weil_audit(p)
            assert audit.max_ratio <= 1.0
            assert 1 <= audit.worst_a < p

    def test_known_sum_against_bound(self):
        assert abs(kloosterman(1, 1, 7).value) == pytest.approx(2.0489173, abs=1e-6)
        assert abs(kloosterman(1, 1, 7).value) <= 2 * math.sqrt(7)

    def test_reports_smallest_attaining_a(self):
        audit = weil_audit(13)
        best = max(
            range(1, 13), key=lambda a: (abs(kloosterman(1, a, 13).value), -a)
        )
        assert audit.worst_a == best

    def test_as_dict_keys(self):
        audit = weil_audit(5)
        assert set(audit.as_dict()) == {"p", "max_ratio", "worst_a"}
