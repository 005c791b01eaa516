import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heegner_forge import (CONSTRUCTIBLE_HEEGNER, FamilyParams,
                           NonIntegralConstant, QuadraticPolynomial,
                           construct, euler_rabinowitsch, famous_catalog,
                           from_product)

heegner_mod4 = st.sampled_from(sorted(CONSTRUCTIBLE_HEEGNER))
small_nonneg = st.integers(min_value=0, max_value=10**4)


class TestConstruct:
    def test_euler_polynomial(self):
        poly = construct(FamilyParams(Z=1, k=0, H=163))
        assert (poly.A, poly.B) == (-1, 41)

    def test_ribenboim_polynomial(self):
        poly = construct(FamilyParams(Z=1, k=40, H=163))
        assert (poly.A, poly.B) == (79, 1601)

    @pytest.mark.parametrize("H", [1, 2])
    def test_rejects_h_1_and_2(self, H):
        with pytest.raises(NonIntegralConstant, match=f"H={H}"):
            construct(FamilyParams(Z=1, k=1, H=H))

    def test_rejects_negative_params(self):
        with pytest.raises(ValueError):
            FamilyParams(Z=-1, k=0, H=163)
        with pytest.raises(ValueError):
            FamilyParams(Z=0, k=-2, H=163)

    def test_rejects_non_heegner(self):
        with pytest.raises(ValueError):
            FamilyParams(Z=1, k=1, H=5)

    def test_type_invariants_enforced(self):
        with pytest.raises(ValueError):
            QuadraticPolynomial(A=2, B=42, H=163)  # even A
        with pytest.raises(ValueError):
            QuadraticPolynomial(A=1, B=999, H=163)  # 4B != A^2 + H


class TestEvaluate:
    @pytest.mark.parametrize("A,B,n,expected", [
        (159, 6361, 0, 6361),
        (159, 6361, 79, 41),
        (19, 131, 4, 71),
    ])
    def test_reference_values(self, A, B, n, expected):
        H = 4 * B - A * A
        assert QuadraticPolynomial(A=A, B=B, H=H).evaluate(n) == expected

    def test_always_positive(self):
        rng = random.Random(11)
        for _ in range(200):
            H = rng.choice(sorted(CONSTRUCTIBLE_HEEGNER))
            poly = from_product(rng.randrange(0, 10**6), H)
            n = rng.randrange(-10**6, 10**6)
            assert poly.evaluate(n) >= (H + 1) // 4 > 0


class TestSymmetry:
    def test_axis_is_exact_rational(self):
        assert from_product(80, 163).axis_of_symmetry() == Fraction(159, 2)
        assert from_product(0, 163).axis_of_symmetry() == Fraction(-1, 2)

    def test_axis_matches_equal_values(self):
        poly = from_product(10, 163)  # A = 19
        assert poly.axis_of_symmetry() == Fraction(19, 2)
        assert poly.evaluate(9) == poly.evaluate(10)

    @pytest.mark.parametrize("A,n,mirror", [(19, 4, 15), (159, 0, 159), (79, 39, 40)])
    def test_mirror_index(self, A, n, mirror):
        poly = from_product((A + 1) // 2, 163)
        assert poly.mirror_index(n) == mirror
        assert poly.evaluate(n) == poly.evaluate(mirror)

    @settings(max_examples=200)
    @given(zk=small_nonneg, H=heegner_mod4,
           n=st.integers(min_value=-10**6, max_value=10**6))
    def test_mirror_identity_everywhere(self, zk, H, n):
        poly = from_product(zk, H)
        assert poly.evaluate(n) == poly.evaluate(poly.A - n)

    @settings(max_examples=200)
    @given(zk=small_nonneg, H=heegner_mod4,
           n=st.integers(min_value=-10**6, max_value=10**6))
    def test_completing_the_square(self, zk, H, n):
        poly = from_product(zk, H)
        assert 4 * poly.evaluate(n) == (2 * n - poly.A) ** 2 + H

    @given(zk=small_nonneg, H=heegner_mod4)
    def test_discriminant_is_minus_h(self, zk, H):
        poly = from_product(zk, H)
        assert poly.discriminant == -H


class TestComplexRoots:
    def test_unit_product_roots(self):
        roots = construct(FamilyParams(Z=1, k=1, H=163)).complex_roots()
        assert roots.real_part == Fraction(1, 2)
        assert roots.imag_magnitude_squared == 163

    def test_formula_instantiation(self):
        roots = from_product(40, 163).complex_roots()
        assert roots.real_part == Fraction(79, 2)

    def test_residual_is_exactly_zero(self):
        rng = random.Random(5)
        for _ in range(50):
            poly = from_product(rng.randrange(0, 10**5),
                                rng.choice(sorted(CONSTRUCTIBLE_HEEGNER)))
            real, imag = poly.complex_roots().residual(poly)
            assert real == 0 and imag == 0


class TestEulerRabinowitsch:
    def test_reference_values(self):
        assert euler_rabinowitsch(Delta=-163, q=1, alpha=2, x=0) == 41
        assert euler_rabinowitsch(Delta=-7, q=1, alpha=2, x=0) == 2

    def test_non_integral_constant(self):
        # (alpha-1)^2*q - Delta = 1 + 1 = 2, not divisible by 4
        with pytest.raises(NonIntegralConstant):
            euler_rabinowitsch(Delta=-1, q=1, alpha=2, x=0)

    def test_rejects_nonpositive_q(self):
        with pytest.raises(ValueError):
            euler_rabinowitsch(Delta=-163, q=0, alpha=2, x=0)

    def test_substitution_identity_seeded(self):
        rng = random.Random(163)
        for _ in range(300):
            Z = rng.randrange(0, 10**4)
            k = rng.randrange(0, 10**4)
            H = rng.choice(sorted(CONSTRUCTIBLE_HEEGNER))
            n = rng.randrange(-10**4, 10**4)
            poly = construct(FamilyParams(Z=Z, k=k, H=H))
            assert euler_rabinowitsch(Delta=-H, q=1, alpha=2 * Z * k, x=-n) \
                == poly.evaluate(n)

    @settings(max_examples=150)
    @given(zk=small_nonneg, H=heegner_mod4,
           n=st.integers(min_value=-10**5, max_value=10**5))
    def test_substitution_identity_property(self, zk, H, n):
        poly = from_product(zk, H)
        assert euler_rabinowitsch(-H, 1, 2 * zk, -n) == poly.evaluate(n)


class TestCatalog:
    def test_entries(self):
        byname = {name: (params, poly) for name, params, poly in famous_catalog()}
        assert set(byname) >= {"Euler", "Legendre", "Ribenboim"}
        euler_params, euler = byname["Euler"]
        assert (euler.A, euler.B, euler.H) == (-1, 41, 163)
        assert euler_params.zk == 0
        legendre_params, legendre = byname["Legendre"]
        assert (legendre.A, legendre.B) == (-1, 17)
        assert legendre.H == 4 * 17 - 1 == 67
        _, ribenboim = byname["Ribenboim"]
        assert (ribenboim.A, ribenboim.B) == (79, 1601)
        assert ribenboim.H == 4 * 1601 - 79 * 79 == 163

    def test_catalog_entries_verify_against_construct(self):
        for _, params, poly in famous_catalog():
            assert construct(params) == poly
