"""Tests for the expression language and second-order jets."""

import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lorentz_surfaces.core.expr_jet import FUNCTIONS, Binary, Call, Const, Expression, Jet2, Unary, Var, eval_jet2, parse
from lorentz_surfaces.errors import ArityError, DomainError, ExpressionSyntaxError, UnknownIdentifierError

leaves = st.one_of(
    st.just(Var("t")),
    st.just(Const(math.pi, "pi")),
    st.floats(min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False).map(Const),
)


def _extend(children):
    return st.one_of(
        st.builds(Unary, st.just("-"), children),
        st.builds(Binary, st.sampled_from(["+", "-", "*", "/", "^"]), children, children),
        st.builds(Call, st.sampled_from(FUNCTIONS), children),
    )


asts = st.recursive(leaves, _extend, max_leaves=12)

smooth_leaves = st.one_of(
    st.just(Var("t")),
    st.floats(min_value=0.5, max_value=1.5).map(lambda x: Const(round(x, 3))),
)


def _bounded_extend(children):
    return st.one_of(
        st.builds(Unary, st.just("-"), children),
        st.builds(Binary, st.sampled_from(["+", "-", "*"]), children, children),
        st.builds(lambda u: Binary("^", Call("tanh", u), Const(2.0)), children),
        st.builds(lambda u, w: Binary("/", u, Binary("+", Const(2.0), Binary("*", w, w))), children, children),
        st.builds(Call, st.sampled_from(["sin", "cos", "tanh"]), children),
        st.builds(lambda u: Call("exp", Call("sin", u)), children),
    )


# smooth everywhere and of moderate size on [-1, 1]
smooth_asts = st.recursive(smooth_leaves, _bounded_extend, max_leaves=6)


def _compose(outer, inner):
    if isinstance(outer, Var):
        return inner
    if isinstance(outer, Unary):
        return replace(outer, operand=_compose(outer.operand, inner))
    if isinstance(outer, Binary):
        return replace(outer, left=_compose(outer.left, inner), right=_compose(outer.right, inner))
    if isinstance(outer, Call):
        return replace(outer, arg=_compose(outer.arg, inner))
    return outer


class TestParsing:
    def test_pythagorean_identity(self):
        assert parse("sin(t)^2 + cos(t)^2").evaluate(0.7) == pytest.approx(1.0)

    def test_unary_minus_binds_looser_than_power(self):
        assert parse("-t^2").evaluate(3.0) == pytest.approx(-9.0)

    def test_power_is_right_associative(self):
        assert parse("2^3^2").evaluate(0.0) == pytest.approx(512.0)

    def test_signed_exponent(self):
        assert parse("2^-1").evaluate(0.0) == pytest.approx(0.5)

    def test_named_constants(self):
        e = parse("2*pi + e")
        assert e.evaluate(0.0) == pytest.approx(2 * math.pi + math.e)
        assert e.to_source() == "2*pi + e"

    def test_custom_variable(self):
        assert parse("u^2 + 1", "u").evaluate(2.0) == pytest.approx(5.0)

    def test_equality_is_structural(self):
        assert parse("(t)+1") == parse("t + 1")
        assert parse("t + 1").source == "t + 1"

    @given(asts)
    @settings(max_examples=200, deadline=None)
    def test_serializer_round_trips(self, ast):
        e = Expression(ast, "t")
        assert parse(e.to_source()) == e


class TestParseErrors:
    def test_empty_source(self):
        with pytest.raises(ExpressionSyntaxError):
            parse("   ")

    def test_unclosed_parenthesis_reports_offset(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse("sin(t")
        assert exc_info.value.offset == 5

    def test_missing_operator(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse("2 t")
        assert exc_info.value.offset == 2

    def test_offsets_count_bytes(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse("t + é")
        assert exc_info.value.offset == 4

    def test_unknown_function(self):
        with pytest.raises(UnknownIdentifierError) as exc_info:
            parse("foo(t)")
        assert exc_info.value.name == "foo"
        assert exc_info.value.offset == 0

    def test_unknown_variable(self):
        with pytest.raises(UnknownIdentifierError):
            parse("x + 1")

    @pytest.mark.parametrize("source, got", [("sin(t, t)", 2), ("exp()", 0)])
    def test_arity(self, source, got):
        with pytest.raises(ArityError, match=f"got {got}"):
            parse(source)

    def test_function_without_call(self):
        with pytest.raises(ExpressionSyntaxError):
            parse("sin + 1")

    def test_variable_shadowing_function(self):
        with pytest.raises(ValueError):
            parse("1", "exp")


class TestDomainErrors:
    def test_logarithm_reports_first_offending_point(self):
        with pytest.raises(DomainError) as exc_info:
            parse("ln(t)").jet(np.array([1.0, -1.0, -2.0]))
        error = exc_info.value
        assert error.t == -1.0
        assert error.index == 1
        assert error.subexpression == "ln(t)"

    def test_division_by_zero(self):
        with pytest.raises(DomainError, match="division by zero") as exc_info:
            parse("1/(t - 1)").evaluate(1.0)
        assert exc_info.value.t == 1.0

    def test_square_root_at_zero(self):
        with pytest.raises(DomainError):
            parse("sqrt(t)").jet(0.0)

    def test_abs_at_zero(self):
        with pytest.raises(DomainError):
            parse("abs(t)").jet(0.0)

    def test_fractional_power_of_negative_base(self):
        with pytest.raises(DomainError):
            parse("t^0.5").evaluate(-1.0)

    def test_tangent_pole_in_floating_point(self):
        with pytest.raises(DomainError, match="pole of tan") as exc_info:
            parse("tan(t)").jet(np.array([0.0, math.pi / 2]))
        assert exc_info.value.index == 1

    def test_tangent_near_pole_is_finite(self):
        assert np.isfinite(parse("tan(t)").evaluate(math.pi / 2 - 1e-6))


class TestJets:
    def test_exponential(self):
        jet = parse("exp(2*t)").jet(0.0)
        assert (jet.v, jet.d1, jet.d2) == pytest.approx((1.0, 2.0, 4.0))

    def test_array_evaluation(self):
        jet = parse("t^2").jet(np.array([1.0, 2.0]))
        np.testing.assert_allclose(jet.v, [1.0, 4.0])
        np.testing.assert_allclose(jet.d1, [2.0, 4.0])
        np.testing.assert_allclose(jet.d2, [2.0, 2.0])

    def test_constant_broadcasts(self):
        jet = parse("3").jet(np.zeros(4))
        assert jet.v.shape == (4,)
        np.testing.assert_array_equal(jet.d1, np.zeros(4))

    @pytest.mark.parametrize(
        "source",
        ["sin(t)*exp(t)", "t^2.5", "abs(t - 3)", "tanh(t)", "ln(1 + t^2)", "sqrt(t)", "cosh(t)/sinh(t)", "tan(t/4)", "t^-2"],
    )
    def test_derivatives_match_finite_differences(self, source):
        e = parse(source)
        ts = np.linspace(0.5, 2.0, 7)
        h = 1e-4
        jet = e.jet(ts)
        f_plus, f_0, f_minus = e.evaluate(ts + h), e.evaluate(ts), e.evaluate(ts - h)
        np.testing.assert_allclose(jet.d1, (f_plus - f_minus) / (2 * h), rtol=1e-6, atol=1e-8)
        np.testing.assert_allclose(jet.d2, (f_plus - 2 * f_0 + f_minus) / h**2, rtol=1e-4, atol=1e-5)

    def test_jet_arithmetic(self):
        x = Jet2.variable(2.0)
        product = x * x * x
        assert (product.v, product.d1, product.d2) == pytest.approx((8.0, 12.0, 12.0))
        quotient = 1.0 / x
        assert (quotient.v, quotient.d1, quotient.d2) == pytest.approx((0.5, -0.25, 0.25))


class TestRandomJets:
    @given(smooth_asts, st.floats(min_value=-1.0, max_value=1.0))
    @settings(max_examples=60, deadline=None)
    def test_derivatives_match_central_differences(self, ast, t):
        e = Expression(ast)
        h = 1e-4
        jet, plus, minus = eval_jet2(e, t), eval_jet2(e, t + h), eval_jet2(e, t - h)
        scale = 1.0 + abs(jet.v) + abs(jet.d1) + abs(jet.d2)
        assert abs(jet.d1 - (plus.v - minus.v) / (2 * h)) <= 1e-5 * scale
        assert abs(jet.d2 - (plus.d1 - minus.d1) / (2 * h)) <= 1e-5 * scale

    @given(smooth_asts, smooth_asts)
    @settings(max_examples=60, deadline=None)
    def test_composition_follows_chain_rule(self, outer_ast, inner_ast):
        ts = np.linspace(-1.0, 1.0, 9)
        composed = eval_jet2(Expression(_compose(outer_ast, inner_ast)), ts)
        inner = eval_jet2(Expression(inner_ast), ts)
        outer = eval_jet2(Expression(outer_ast), inner.v)
        expected = (
            outer.v,
            outer.d1 * inner.d1,
            outer.d2 * inner.d1**2 + outer.d1 * inner.d2,
        )
        scale = 1.0 + np.abs(outer.v) + np.abs(outer.d1) + np.abs(outer.d2)
        scale = scale * (1.0 + np.abs(inner.d1) + np.abs(inner.d2)) ** 2
        for got, want in zip((composed.v, composed.d1, composed.d2), expected, strict=True):
            error = np.abs(np.broadcast_to(np.asarray(got) - np.asarray(want), ts.shape))
            np.testing.assert_array_less(error, 1e-10 * scale)


class TestExpressionArithmetic:
    def test_identity_folding(self):
        t = Expression.identity()
        assert t + 0 is t
        assert t * 1 is t
        assert t / 1 is t
        assert t**1 is t
        assert (t * 0).to_source() == "0"
        assert (t**0).to_source() == "1"
        assert -(-t) == t

    def test_negative_constant_merges_into_subtraction(self):
        t = Expression.identity()
        assert (t + Expression.constant(-2.0)).to_source() == "t - 2"

    def test_built_expression_evaluates(self):
        t = Expression.identity()
        e = (t * t + 1) / (t - 3)
        assert e.evaluate(1.0) == pytest.approx(-1.0)
        assert parse(e.to_source()) == e

    def test_substitute_linear(self):
        e = parse("t^2").substitute_linear(-1, 2.0)
        assert e.evaluate(3.0) == pytest.approx(1.0)

    def test_substitute_linear_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            parse("t").substitute_linear(2)

    def test_constant_detection(self):
        assert parse("2*pi").is_constant
        assert not parse("2*t").is_constant
