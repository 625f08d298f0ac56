"""Unit tests for the element expression parser and evaluator."""

import pytest

from ctower.exceptions import ExprSyntaxError, UnknownGeneratorError
from ctower.expr import Add, Gen, Int, Mul, Neg, Pow, Sub, eval_expr, parse_expr
from ctower.ring.elements import PrimeId
from ctower.ring.tower import Tower

X00 = Gen(PrimeId.gen_x(0, 0))
Y00 = Gen(PrimeId.gen_y(0, 0))


class TestParser:
    def test_product(self):
        assert parse_expr("x(0,0)*y(0,0)") == Mul(X00, Y00)

    def test_sum_of_powers(self):
        assert parse_expr("y(0,0)^2 + y(0,0)^5") == Add(Pow(Y00, 2), Pow(Y00, 5))

    def test_precedence(self):
        assert parse_expr("1 + 2 * 3") == Add(Int(1), Mul(Int(2), Int(3)))
        assert parse_expr("-x(0,0)^2") == Neg(Pow(X00, 2))
        assert parse_expr("1 - 2 - 3") == Sub(Sub(Int(1), Int(2)), Int(3))
        assert parse_expr("(1 + 2) * 3") == Mul(Add(Int(1), Int(2)), Int(3))
        assert parse_expr("-2 * -3") == Mul(Neg(Int(2)), Neg(Int(3)))

    def test_base_primes(self):
        assert parse_expr("p(4)") == Gen(PrimeId.base(4))

    @pytest.mark.parametrize(
        "text,offset",
        [
            ("x(0,0)+", 7),
            ("x(0,0) $", 7),
            ("", 0),
            ("x(0)", 3),
            ("(1 + 2", 6),
            ("2 3", 2),
            ("y(0,0)^-1", 7),
        ],
    )
    def test_syntax_errors(self, text, offset):
        with pytest.raises(ExprSyntaxError) as excinfo:
            parse_expr(text)
        assert excinfo.value.offset == offset


class TestEvaluation:
    @pytest.fixture
    def fac2(self) -> Tower:
        tower = Tower()
        tower.extend_factor("p:0", (0, 0))
        return tower

    def test_defining_relation(self, fac2):
        assert eval_expr(fac2, "x(0,0)*y(0,0)") == fac2.int_const(1, 2)

    def test_degree_of_worked_example(self, fac2):
        assert fac2.deg_x(eval_expr(fac2, "y(0,0)^2+y(0,0)^5")) == -2

    def test_generators_are_lifted_to_the_top(self, fac2):
        fac2.extend_localize("p:1")
        e = eval_expr(fac2, "x(0,0)")
        assert e.level == 2
        assert eval_expr(fac2, "p(3)") == fac2.int_const(2, 7)

    def test_explicit_level(self, fac2):
        fac2.extend_localize("p:1")
        assert eval_expr(fac2, "x(0,0) + 1", level=1).level == 1
        assert eval_expr(fac2, "4", level=0) == fac2.int_const(0, 4)

    def test_unknown_generator(self, fac2):
        with pytest.raises(UnknownGeneratorError):
            eval_expr(fac2, "x(9,9)")

    def test_generator_above_requested_level(self, fac2):
        with pytest.raises(UnknownGeneratorError):
            eval_expr(fac2, "y(0,0)", level=0)
