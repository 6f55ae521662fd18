import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minertia.exactnum import (
    GaussianRational,
    RationalPolynomial,
    format_rational,
    gaussian_arith,
    parse_rational,
    poly_gcd,
    poly_gcd_tower,
)

fractions_st = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
gaussians_st = st.builds(GaussianRational, fractions_st, fractions_st)


class TestRationalText:
    def test_parse_forms(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational("-7") == Fraction(-7)
        assert parse_rational(" 5/10 ") == Fraction(1, 2)

    def test_format_denominator_one(self):
        assert format_rational(Fraction(6, 2)) == "3"
        assert format_rational(Fraction(-1, 3)) == "-1/3"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_rational("x+1")
        with pytest.raises(ValueError):
            parse_rational("1/0")

    @given(fractions_st)
    def test_round_trip(self, x):
        assert parse_rational(format_rational(x)) == x


class TestGaussianRational:
    def test_norm_example(self):
        # (1/2 + (1/3)i) * conj(...) = 1/4 + 1/9 = 13/36
        z = GaussianRational(Fraction(1, 2), Fraction(1, 3))
        prod = z * z.conj()
        assert prod == GaussianRational(Fraction(13, 36), 0)
        assert prod.im == 0

    def test_multiplicative_identity(self):
        z = GaussianRational(Fraction(-3, 7), Fraction(2, 5))
        assert z * GaussianRational(1) == z

    @given(gaussians_st)
    def test_conj_involution(self, z):
        assert z.conj().conj() == z

    @given(gaussians_st, gaussians_st, gaussians_st)
    @settings(max_examples=60)
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(gaussians_st)
    def test_self_conjugate_product_real_nonnegative(self, a):
        p = a * a.conj()
        assert p.im == 0
        assert p.re >= 0
        assert p.re == a.norm_sq()

    def test_division_exact(self):
        a = GaussianRational(1, 1)
        b = GaussianRational(0, 1)
        assert a / b == GaussianRational(1, -1)
        assert (a / b) * b == a

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)

    def test_arith_dispatch(self):
        a = GaussianRational(2, 1)
        b = GaussianRational(1, -1)
        assert gaussian_arith(a, b, "add") == GaussianRational(3, 0)
        assert gaussian_arith(a, b, "sub") == GaussianRational(1, 2)
        assert gaussian_arith(a, b, "mul") == GaussianRational(3, -1)
        assert gaussian_arith(a, b, "div") * b == a
        assert gaussian_arith(a, b, "conj") == GaussianRational(2, -1)
        with pytest.raises(ValueError):
            gaussian_arith(a, b, "pow")

    def test_json_round_trip(self):
        z = GaussianRational(Fraction(-5, 3), Fraction(7, 2))
        assert GaussianRational.from_json(z.to_json()) == z

    def test_json_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            GaussianRational.from_json({"re": "1"})

    def test_immutability(self):
        z = GaussianRational(1)
        with pytest.raises(AttributeError):
            z.re = Fraction(2)

    def test_hash_consistency(self):
        assert hash(GaussianRational(Fraction(2, 4), 0)) == hash(
            GaussianRational(Fraction(1, 2), 0)
        )


class TestRationalPolynomial:
    def test_trim_and_degree(self):
        p = RationalPolynomial([1, 2, 0, 0])
        assert p.coeffs == (Fraction(1), Fraction(2))
        assert p.degree == 1
        assert RationalPolynomial([]).degree == -1

    def test_from_roots_frozen_expansion(self):
        # (x-1)^3 (x-2) = x^4 - 5x^3 + 9x^2 - 7x + 2, expanded by hand
        p = RationalPolynomial.from_roots([1, 1, 1, 2])
        assert p.coeffs == (
            Fraction(2),
            Fraction(-7),
            Fraction(9),
            Fraction(-5),
            Fraction(1),
        )

    def test_evaluate_and_derivative(self):
        p = RationalPolynomial([2, -7, 9, -5, 1])
        assert p.evaluate(1) == 0
        assert p.evaluate(2) == 0
        assert p.evaluate(0) == 2
        assert p.derivative().coeffs == (
            Fraction(-7),
            Fraction(18),
            Fraction(-15),
            Fraction(4),
        )

    def test_power(self):
        p = RationalPolynomial([-1, 1]) ** 3
        assert p == RationalPolynomial([-1, 3, -3, 1])


class TestPolyGcdTower:
    def test_triple_root_depth_two(self):
        p = RationalPolynomial.from_roots([1, 1, 1, 2])
        g = poly_gcd_tower(p, 2)
        assert g == RationalPolynomial([-1, 1])

    def test_depth_zero_returns_monic_input(self):
        p = RationalPolynomial([-10, 2])  # 2x - 10
        assert poly_gcd_tower(p, 0) == RationalPolynomial([-5, 1])

    def test_coprime_derivative(self):
        p = RationalPolynomial.from_roots([1, 2])
        g = poly_gcd_tower(p, 1)
        assert g.degree == 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd_tower(RationalPolynomial([]), 1)

    def test_negative_depth_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd_tower(RationalPolynomial([1, 1]), -1)

    def test_tower_matches_multiplicity_structure(self):
        rng = random.Random(1234)
        for _ in range(40):
            roots = rng.sample(range(-6, 7), rng.randint(1, 3))
            mults = [rng.randint(1, 4) for _ in roots]
            p = RationalPolynomial([1])
            for r, m in zip(roots, mults):
                p = p * (RationalPolynomial([-r, 1]) ** m)
            scale = Fraction(rng.randint(1, 5), rng.randint(1, 5))
            p = p * scale
            for depth in range(0, 5):
                expected = RationalPolynomial([1])
                for r, m in zip(roots, mults):
                    if m > depth:
                        expected = expected * (
                            RationalPolynomial([-r, 1]) ** (m - depth)
                        )
                assert poly_gcd_tower(p, depth) == expected

    def test_tower_roots_are_roots_of_p(self):
        p = RationalPolynomial.from_roots([3, 3, 3, -2, -2, 5])
        g = poly_gcd_tower(p, 1)  # roots of multiplicity >= 2
        assert g == RationalPolynomial.from_roots([3, 3, -2]).monic()
        # each rational root of the tower must be a root of p itself
        for root in (3, -2):
            assert g.evaluate(root) == 0
            assert p.evaluate(root) == 0

    def test_gcd_of_scaled_inputs(self):
        a = RationalPolynomial.from_roots([1, 2]) * Fraction(3, 7)
        b = RationalPolynomial.from_roots([2, 5]) * Fraction(-2, 9)
        assert poly_gcd(a, b) == RationalPolynomial([-2, 1])

    def test_gcd_with_zero(self):
        p = RationalPolynomial([-4, 2])
        z = RationalPolynomial([])
        assert poly_gcd(p, z) == RationalPolynomial([-2, 1])
        assert poly_gcd(z, z) == z
