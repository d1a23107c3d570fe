from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rigikit import Mode, evaluate, parse_expression, unparse
from rigikit.errors import (
    DivisionByZeroError,
    ExactUnsupportedError,
    ExpressionSyntaxError,
    UnknownSymbolError,
)
from rigikit.expressions import (
    BinOp,
    Func,
    Neg,
    Num,
    Pow,
    is_rational_expression,
    to_rational_function,
    uses_parameter,
)


def test_fraction_literal_shape():
    tree = parse_expression("3/4")
    assert isinstance(tree, BinOp) and tree.op == "/"
    assert tree.left == Num(Fraction(3), "3") and tree.right == Num(Fraction(4), "4")


def test_sqrt_shape():
    tree = parse_expression("sqrt(2)")
    assert tree == Func("sqrt", Num(Fraction(2), "2"))


def test_precedence_pow_binds_before_add():
    tree = parse_expression("1+cos(t)^2")
    assert isinstance(tree, BinOp) and tree.op == "+"
    assert isinstance(tree.right, Pow) and tree.right.exponent == 2
    assert isinstance(tree.right.base, Func) and tree.right.base.name == "cos"


def test_left_associativity():
    tree = parse_expression("1-2-3")
    assert tree.op == "-" and isinstance(tree.left, BinOp) and tree.left.op == "-"
    assert evaluate(tree, mode=Mode.EXACT) == -4


def test_unary_minus_below_power():
    assert evaluate(parse_expression("-2^2"), mode=Mode.EXACT) == -4
    assert evaluate(parse_expression("(-2)^2"), mode=Mode.EXACT) == 4


@pytest.mark.parametrize(
    "src",
    ["", "  ", "1+", "(1", "sqrt 2", "2^t", "1//2", "1/0", "2..5"],
)
def test_syntax_errors(src):
    with pytest.raises(ExpressionSyntaxError):
        parse_expression(src)


def test_unknown_symbol_position():
    with pytest.raises(UnknownSymbolError) as err:
        parse_expression("1+foo(2)")
    assert err.value.name == "foo"
    assert err.value.position == 2


def test_exact_evaluation():
    assert evaluate(parse_expression("3/4"), t=Fraction(0), mode=Mode.EXACT) == Fraction(3, 4)
    assert evaluate(parse_expression("sqrt(9/4)"), mode=Mode.EXACT) == Fraction(3, 2)
    assert evaluate(parse_expression("sin(0)"), mode=Mode.EXACT) == 0
    assert evaluate(parse_expression("cos(0)"), mode=Mode.EXACT) == 1


def test_exact_rejects_irrational():
    with pytest.raises(ExactUnsupportedError):
        evaluate(parse_expression("sqrt(2)"), mode=Mode.EXACT)
    with pytest.raises(ExactUnsupportedError):
        evaluate(parse_expression("sin(1)"), mode=Mode.EXACT)


def test_approx_evaluation():
    assert evaluate(parse_expression("sqrt(2)")) == pytest.approx(1.4142135623730951)
    value = evaluate(parse_expression("sin(t)^2+cos(t)^2"), t=0.7)
    assert value == pytest.approx(1.0, abs=1e-15)


def test_division_by_zero_at_evaluation():
    with pytest.raises(DivisionByZeroError):
        evaluate(parse_expression("1/t"), t=0.0)
    with pytest.raises(DivisionByZeroError):
        evaluate(parse_expression("t^-1"), t=Fraction(0), mode=Mode.EXACT)


def test_parameter_binding():
    tree = parse_expression("t+1")
    assert uses_parameter(tree)
    with pytest.raises(UnknownSymbolError):
        evaluate(tree)


def test_scientific_notation_round_trip():
    tree = parse_expression(repr(1e-09))
    assert evaluate(tree) == 1e-09


def test_rational_function_normalization():
    num, den = to_rational_function(parse_expression("(1-t^2)/(1+t^2)"))
    t = Fraction(1, 3)
    value = sum(c * t**i for i, c in enumerate(num)) / sum(
        c * t**i for i, c in enumerate(den)
    )
    assert value == (1 - t**2) / (1 + t**2)
    assert not is_rational_expression(parse_expression("cos(t)"))


# -- parse/unparse fixpoint (property) --


_number = st.integers(min_value=0, max_value=99).map(lambda n: Num(Fraction(n), str(n)))


def _exprs():
    from rigikit.expressions import Param, _is_literal_zero

    return st.recursive(
        st.one_of(_number, st.just(Param())),
        lambda inner: st.one_of(
            st.builds(Neg, inner),
            st.builds(
                BinOp, st.sampled_from("+-*"), inner, inner
            ),
            st.builds(
                lambda left, right: BinOp("/", left, right),
                inner,
                inner.filter(lambda e: not _is_literal_zero(e)),
            ),
            st.builds(Pow, inner, st.integers(min_value=0, max_value=5)),
            st.builds(Func, st.sampled_from(["sqrt", "sin", "cos"]), inner),
        ),
        max_leaves=25,
    )


@given(_exprs())
def test_parse_unparse_fixpoint(tree):
    text = unparse(tree)
    reparsed = parse_expression(text)
    assert reparsed == tree
    assert unparse(reparsed) == text
