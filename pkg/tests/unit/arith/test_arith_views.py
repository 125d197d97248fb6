"""
Unit tests for QuadExt and the canonical rational form.
"""

import pytest
import random
from fractions import Fraction
from horadam_quat.arith.views import QuadExt, canonical, is_rational


HALF = Fraction(1, 2)


@pytest.fixture
def alpha():
    """Golden ratio root (1 + √5)/2."""
    return QuadExt(HALF, HALF, 5)


@pytest.fixture
def beta():
    return QuadExt(HALF, -HALF, 5)


class TestCanonical:
    """Tests for canonical() and is_rational()."""

    def test_integral_fraction_collapses_to_int(self):
        value = canonical(Fraction(6, 3))
        assert value == 2
        assert type(value) is int

    def test_proper_fraction_is_kept(self):
        assert canonical(Fraction(1, 3)) == Fraction(1, 3)

    @pytest.mark.parametrize("value,expected", [
        (3, True),
        (Fraction(1, 2), True),
        (True, False),
        (0.5, False),
        ("1/2", False),
    ])
    def test_is_rational(self, value, expected):
        assert is_rational(value) is expected


class TestQuadExtArithmetic:
    """Tests for ring operations in Q(√D)."""

    def test_zero_discriminant_rejected(self):
        with pytest.raises(ValueError):
            QuadExt(1, 1, 0)

    def test_sqrt_d_squared_is_d(self):
        root = QuadExt.sqrt_d(5)
        assert root * root == QuadExt(5, 0, 5)

    def test_alpha_beta_product_is_minus_q(self, alpha, beta):
        assert alpha * beta == QuadExt(-1, 0, 5)

    def test_multiplicative_identity(self, alpha):
        assert QuadExt.from_rational(1, 5) * alpha == alpha

    def test_general_product(self):
        assert QuadExt(1, 2, 5) * QuadExt(3, -1, 5) == QuadExt(-7, 5, 5)

    def test_mismatched_discriminants_rejected(self):
        with pytest.raises(ValueError):
            QuadExt(1, 1, 5) + QuadExt(1, 1, 8)

    def test_rational_operands_are_lifted(self, alpha):
        assert alpha + 1 == QuadExt(Fraction(3, 2), HALF, 5)
        assert 1 - alpha == QuadExt(HALF, -HALF, 5)
        assert 2 * alpha == QuadExt(1, 1, 5)

    def test_alpha_squared_is_alpha_plus_one(self, alpha):
        assert alpha ** 2 == alpha + 1

    def test_negative_power_uses_inverse(self, alpha, beta):
        assert alpha ** -1 == -beta
        assert alpha ** -3 * alpha ** 3 == 1

    def test_division(self, alpha, beta):
        assert (alpha * beta) / beta == alpha


class TestQuadExtInverse:
    """Tests for norm, conjugate and inverse."""

    def test_inverse_of_one(self):
        assert QuadExt(1, 0, 5).inverse() == QuadExt(1, 0, 5)

    def test_inverse_of_sqrt_five(self):
        assert QuadExt(0, 1, 5).inverse() == QuadExt(0, Fraction(1, 5), 5)

    def test_inverse_of_alpha_is_minus_beta(self, alpha):
        assert alpha.inverse() == QuadExt(-HALF, HALF, 5)

    def test_zero_norm_not_invertible(self):
        # D = 4 is a perfect square: 2 - √4 is a zero divisor
        with pytest.raises(ZeroDivisionError):
            QuadExt(2, 1, 4).inverse()

    def test_norm_and_conjugate(self, alpha):
        assert alpha.norm() == -1
        assert alpha * alpha.conjugate() == alpha.norm()

    def test_negative_discriminant(self):
        i_root = QuadExt(0, 1, -1)
        assert i_root * i_root == -1
        assert i_root.inverse() == QuadExt(0, -1, -1)


class TestQuadExtEquality:
    """Tests for equality, hashing and text form."""

    def test_equal_to_rational_when_irrational_part_vanishes(self):
        assert QuadExt(3, 0, 5) == 3
        assert QuadExt(3, 1, 5) != 3

    def test_hash_matches_rational(self):
        assert hash(QuadExt(Fraction(1, 2), 0, 5)) == hash(Fraction(1, 2))

    def test_rationals_equal_across_discriminants(self):
        assert QuadExt(2, 0, 5) == QuadExt(2, 0, 3)
        assert hash(QuadExt(2, 0, 5)) == hash(QuadExt(2, 0, 3))
        assert QuadExt(2, 1, 5) != QuadExt(2, 1, 3)

    @pytest.mark.parametrize("value,text", [
        (QuadExt(1, -1, 5), "1-√5"),
        (QuadExt(3, 1, 5), "3+√5"),
        (QuadExt(0, 2, -3), "2√(-3)"),
        (QuadExt(Fraction(1, 2), 0, 5), "1/2"),
    ])
    def test_to_string(self, value, text):
        assert value.to_string() == text


def random_quadext(rng: random.Random, D=5) -> QuadExt:
    return QuadExt(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 4)), D)


class TestQuadExtRing:
    """Ring axioms and conjugation on random samples."""

    @pytest.mark.parametrize("D", [5, 8, -3, Fraction(5, 4)])
    def test_ring_axioms(self, D):
        rng = random.Random(17)
        for _ in range(40):
            u, v, w = (random_quadext(rng, D) for _ in range(3))
            assert (u * v) * w == u * (v * w)
            assert (u + v) + w == u + (v + w)
            assert u * v == v * u
            assert u + v == v + u
            assert u * (v + w) == u * v + u * w
            assert u - u == 0

    @pytest.mark.parametrize("D", [5, 13, -7])
    def test_conjugation_is_a_ring_homomorphism(self, D):
        rng = random.Random(23)
        for _ in range(40):
            u, v = random_quadext(rng, D), random_quadext(rng, D)
            assert (u * v).conjugate() == u.conjugate() * v.conjugate()
            assert (u + v).conjugate() == u.conjugate() + v.conjugate()
            assert u.conjugate().conjugate() == u
            assert u * u.conjugate() == u.norm()

    @pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (-3, 2), (3, -2), (1, -3)])
    def test_conjugation_swaps_roots(self, p, q):
        D = p * p + 4 * q
        alpha = QuadExt(Fraction(p, 2), HALF, D)
        beta = QuadExt(Fraction(p, 2), -HALF, D)
        assert alpha.conjugate() == beta
        assert beta.conjugate() == alpha
        assert alpha + beta == p
        assert alpha * beta == -q
