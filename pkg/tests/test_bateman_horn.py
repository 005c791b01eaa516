import math
import random

import pytest

from heegner_forge import (DomainError, NotPrime, ValueTooSmall,
                           approx_constant, exact_constant,
                           expected_count_simple, expected_count_sum,
                           from_product, logarithmic_integral, omega,
                           residue_census, richness_report, sieve)
from heegner_forge.bateman_horn import (DEFAULT_CUTOFF, EULER_MASCHERONI,
                                        FITTED_LOGLOG_OFFSET)
from oracles import li_simpson, omega_bruteforce

EULER = from_product(0, 163)  # n^2 + n + 41


class TestOmega:
    def test_euler_mod_2_has_no_roots(self):
        assert omega_bruteforce(-1, 41, 2) == 0
        assert omega(EULER, 2) == 0

    def test_euler_mod_41_has_two_roots(self):
        assert omega_bruteforce(-1, 41, 41) == 2
        assert omega(EULER, 41) == 2

    def test_discriminant_prime_gives_double_root(self):
        assert omega(EULER, 163) == 1
        assert omega(from_product(80, 163), 163) == 1

    def test_rejects_composite_modulus(self):
        with pytest.raises(NotPrime):
            omega(EULER, 4)

    def test_formula_matches_bruteforce(self):
        rng = random.Random(21)
        primes = sieve(1000)
        for _ in range(8):
            poly = from_product(rng.randrange(0, 500),
                                rng.choice([3, 7, 11, 19, 43, 67, 163]))
            for p in primes:
                assert omega(poly, p) == omega_bruteforce(poly.A, poly.B, p)


class TestExactConstant:
    def test_reference_band_at_1e5(self):
        c = exact_constant(from_product(80, 163), 10**5).constant
        for ref in (3.3204, 3.320376, 3.319940, 3.3259186, 3.3283621, 3.3206296):
            assert abs(c - ref) <= 0.02

    def test_same_for_all_members_with_same_h(self):
        cutoff = 10**4
        values = {exact_constant(from_product(zk, 163), cutoff).constant
                  for zk in (0, 80, 100, 250, 500)}
        assert len(values) == 1

    def test_even_valued_family_collapses_to_zero(self):
        # H = 7: B is even, so f(n) is always even and omega(2) = 2
        assert exact_constant(from_product(1, 7), 10**3).constant == 0.0

    def test_log_partial_sums_converge(self):
        poly = from_product(80, 163)
        c1 = exact_constant(poly, 10**5).constant
        c2 = exact_constant(poly, 2 * 10**5).constant
        assert abs(math.log(c2) - math.log(c1)) < 1e-2

    def test_cutoff_floor(self):
        with pytest.raises(ValueError):
            exact_constant(EULER, 999)

    def test_estimate_metadata(self):
        est = exact_constant(EULER, 10**3)
        assert est.method.cutoff == 10**3
        assert est.constant > 0


class TestLogarithmicIntegral:
    def test_li_of_two_is_zero(self):
        assert logarithmic_integral(2) == 0.0

    def test_li_1000_against_simpson_oracle(self):
        value = logarithmic_integral(1000)
        oracle = li_simpson(1000)
        assert abs(value - oracle) / oracle < 1e-6
        assert abs(value - 176.6) < 0.5

    def test_domain_error(self):
        with pytest.raises(DomainError):
            logarithmic_integral(1.5)

    def test_asymptotic_ratio_decreases_toward_one(self):
        ratios = [logarithmic_integral(x) * math.log(x) / x
                  for x in (10**3, 10**4, 10**5, 10**6)]
        assert all(r > 1 for r in ratios)
        assert ratios == sorted(ratios, reverse=True)


class TestExpectedCounts:
    def test_simple_reference_values(self):
        assert abs(expected_count_simple(3.3204, 200) - 125.34) < 0.5
        assert abs(expected_count_simple(3.319940, 1000) - 480.61) < 0.5

    def test_simple_closed_form(self):
        x = math.exp(3)
        assert expected_count_simple(1.0, x) == pytest.approx(x / 3)

    def test_simple_domain(self):
        with pytest.raises(ValueError):
            expected_count_simple(1.0, 2)

    def test_sum_is_linear_in_constant(self):
        poly = from_product(250, 163)
        one = expected_count_sum(poly, 1.0, 0, 499)
        assert expected_count_sum(poly, 2.5, 0, 499) == pytest.approx(2.5 * one)
        assert expected_count_sum(poly, 0.0, 0, 499) == 0.0

    def test_sum_single_term(self):
        poly = from_product(250, 163)
        assert expected_count_sum(poly, 3.0, 7, 7) \
            == pytest.approx(3.0 / math.log(poly.evaluate(7)))

    def test_sum_termwise_value(self):
        # independent accumulation at the reference arguments
        poly = from_product(250, 163)  # n^2 - 499n + 62291
        oracle = math.fsum(3.320376 / math.log(poly.evaluate(n))
                           for n in range(500))
        assert expected_count_sum(poly, 3.320376, 0, 499) == pytest.approx(oracle)
        assert oracle == pytest.approx(192.0367, abs=0.01)

    def test_sum_value_too_small(self):
        # H = 3, Zk = 1 gives f(n) = n^2 - n + 1 with f(0) = 1 < 3
        with pytest.raises(ValueTooSmall):
            expected_count_sum(from_product(1, 3), 1.0, 0, 5)


class TestResidueCensus:
    def test_tiny_bound(self):
        census = residue_census(163, 3)
        assert (census.qr_count, census.nqr_count) == (0, 1)
        assert census.delta_p == 1.0

    def test_reference_bound_6361(self):
        census = residue_census(163, 6361)
        assert (census.qr_count, census.nqr_count) == (401, 426)
        assert abs(census.delta_p - 0.03023) < 1e-5

    def test_accounting_identity(self):
        for x in (500, 6361):
            census = residue_census(163, x)
            excluded = 1 + (1 if 163 <= x else 0)  # p = 2 and p = 163
            assert census.qr_count + census.nqr_count == len(sieve(x)) - excluded

    def test_domain(self):
        with pytest.raises(ValueError):
            residue_census(163, 2)


class TestApproxConstant:
    @pytest.mark.parametrize("x,boxed", [
        (6361, 3.326106183),
        (9941, 3.328278186),
        (25471, 3.332533665),
    ])
    def test_reference_values(self, x, boxed):
        est = approx_constant(0.03023, x)
        assert abs(est.constant - boxed) / boxed <= 1e-3

    def test_double_log_is_base_10(self):
        factor = math.log10(math.log10(6361)) + FITTED_LOGLOG_OFFSET
        assert factor == pytest.approx(39.75528632, abs=1e-7)

    def test_zero_delta_gives_one(self):
        assert approx_constant(0.0, 100).constant == 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            approx_constant(0.03, 10)

    def test_strictly_increasing(self):
        assert (approx_constant(0.02, 6361).constant
                < approx_constant(0.03, 6361).constant)
        assert (approx_constant(0.03, 6361).constant
                < approx_constant(0.03, 9941).constant)

    def test_gamma_reference_constant(self):
        # kept for documentation; the fitted offset is what computations use
        assert abs(EULER_MASCHERONI - 0.5772156649) < 1e-10
        assert FITTED_LOGLOG_OFFSET == 39.1751


class TestRichness:
    def test_actual_exceeds_expected(self):
        rep = richness_report(from_product(100, 163), 0, 199, cutoff=10**4)
        assert rep.actual == 172
        assert rep.ratio > 1
        assert rep.expected == pytest.approx(rep.actual / rep.ratio)

    def test_default_cutoff_constant(self):
        assert DEFAULT_CUTOFF == 10**6
