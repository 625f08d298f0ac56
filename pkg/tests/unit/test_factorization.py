"""Unit tests for factorization levels A[x, y]/<xy - q> over Z with q = 5."""

import pytest

from ctower.exceptions import DegreeError, LevelError, NotDivisibleError
from ctower.expr import eval_expr
from ctower.ring import factorization
from ctower.ring.elements import FacElement, Integer


def ev(tower, text):
    return eval_expr(tower, text)


class TestRelation:
    def test_xy_is_q(self, fac5):
        assert fac5.equals(ev(fac5, "x(2,0)*y(2,0)"), fac5.int_const(1, 5))

    def test_monomial_collision(self, fac5):
        # x^3 y^5 = 5^3 y^2
        assert ev(fac5, "x(2,0)^3 * y(2,0)^5") == ev(fac5, "125*y(2,0)^2")
        assert ev(fac5, "x(2,0)^4 * y(2,0)") == ev(fac5, "5*x(2,0)^3")

    def test_canonical_payload(self, fac5):
        e = ev(fac5, "3*x(2,0)^2 - 6*y(2,0) + 1")
        assert e == FacElement(1, ((2, Integer(0, 3)),), Integer(0, 1), ((1, Integer(0, -6)),))
        assert ev(fac5, "x(2,0) - x(2,0)") == fac5.zero(1)


class TestDegrees:
    def test_worked_example(self, fac5):
        e = ev(fac5, "y(2,0)^2 + y(2,0)^5")
        assert fac5.deg_x(e) == -2
        assert fac5.deg_y(e) == 5
        assert fac5.degrees(e).total == 3

    def test_constants_have_degree_zero(self, fac5):
        assert fac5.degrees(fac5.int_const(1, 7)) == factorization.DegPair(0, 0)

    def test_zero_has_no_degree(self, fac5):
        with pytest.raises(DegreeError):
            fac5.deg_x(fac5.zero(1))

    def test_degrees_need_a_factorization_level(self, loc2):
        with pytest.raises(LevelError):
            loc2.deg_x(loc2.one(1))


class TestShape:
    def test_monomials(self, fac5):
        assert factorization.is_monomial(ev(fac5, "3*x(2,0)^2"))
        assert not factorization.is_monomial(ev(fac5, "1 + x(2,0)"))

    def test_products_landing_in_parent(self, fac5):
        cases = [
            ("2*x(2,0)^3", "3*y(2,0)^3", True),
            ("x(2,0)", "y(2,0)^2", False),
            ("4", "7", True),
            ("0", "x(2,0) + 1", True),
            ("1 + x(2,0)", "y(2,0)", False),
        ]
        for a, b, expected in cases:
            sigma, tau = ev(fac5, a), ev(fac5, b)
            assert factorization.lands_in_parent(fac5, sigma, tau) is expected
            product = fac5.mul(sigma, tau)
            assert (not product.xs and not product.ys) is expected

    def test_laurent_view(self, fac5):
        coefficients = factorization.laurent_coefficients(fac5, ev(fac5, "y(2,0)^2 + y(2,0)^5"))
        assert coefficients == {-5: Integer(0, 3125), -2: Integer(0, 25)}


class TestUnits:
    def test_only_unit_constants(self, fac5):
        assert not fac5.is_unit(ev(fac5, "1 + x(2,0)"))
        assert not fac5.is_unit(ev(fac5, "x(2,0)"))
        assert fac5.is_unit(ev(fac5, "-1"))
        assert not fac5.is_unit(ev(fac5, "5"))


class TestGeneratorOracles:
    def test_x_divides_5y(self, fac5):
        five_y = ev(fac5, "5*y(2,0)")
        assert factorization.x_multiple_oracle(fac5, five_y)
        quotient = factorization.exact_div_x(fac5, five_y)
        assert quotient == ev(fac5, "y(2,0)^2")
        assert fac5.mul(ev(fac5, "x(2,0)"), quotient) == five_y

    def test_y_divides_5x(self, fac5):
        five_x = ev(fac5, "5*x(2,0)")
        assert factorization.y_multiple_oracle(fac5, five_x)
        assert factorization.exact_div_y(fac5, five_x) == ev(fac5, "x(2,0)^2")

    def test_x_does_not_divide_1_plus_x(self, fac5):
        sigma = ev(fac5, "1 + x(2,0)")
        assert not fac5.divides("x:2:0", sigma)
        with pytest.raises(NotDivisibleError):
            fac5.exact_div("x:2:0", sigma)

    def test_generators_are_not_associates(self, fac5):
        assert not fac5.is_associate("x:2:0", "y:2:0")

    def test_base_prime_divides_coefficientwise(self, fac5):
        sigma = ev(fac5, "3*x(2,0)^2 - 6*y(2,0)")
        assert fac5.divides("p:1", sigma)
        assert fac5.exact_div("p:1", sigma) == ev(fac5, "x(2,0)^2 - 2*y(2,0)")
        assert fac5.prime_power_divides("p:1", 2, ev(fac5, "9*x(2,0)"))
        assert not fac5.prime_power_divides("p:1", 3, ev(fac5, "9*x(2,0)"))
