"""Parsing and evaluation of coordinate and motion expressions.

Grammar (whitespace ignored)::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | power
    power    := atom ('^' exponent)*          # integer exponents only
    exponent := ['-'] INTEGER
    atom     := NUMBER | 't' | FUNC '(' expr ')' | '(' expr ')'
    FUNC     := 'sqrt' | 'sin' | 'cos'

Binary operators of equal precedence associate to the left.  Number literals
(integers, decimals, scientific notation) always denote exact rationals; the
only free symbol is the motion parameter ``t``.  There is no simplification:
expressions evaluate, nothing more.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    ExactUnsupportedError,
    ExpressionSyntaxError,
    UnknownSymbolError,
)
from .scalars import Mode, Scalar

FUNCTIONS = ("sqrt", "sin", "cos")


@dataclass(frozen=True)
class Num:
    value: Fraction
    lexeme: str


@dataclass(frozen=True)
class Param:
    """The motion parameter ``t``."""


@dataclass(frozen=True)
class Neg:
    arg: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


@dataclass(frozen=True)
class Func:
    name: str  # one of sqrt sin cos
    arg: "Expression"


Expression = Num | Param | Neg | BinOp | Pow | Func

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN.match(src, pos)
        if match is None:
            if src[pos:].strip() == "":
                break
            bad = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {src[bad]!r}", bad)
        if match.lastgroup is not None:
            tokens.append((match.lastgroup, match.group(match.lastgroup), match.start(match.lastgroup)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ExpressionSyntaxError("unexpected end of input", len(self.src))
        self.index += 1
        return tok

    def expect_op(self, op: str):
        tok = self.next()
        if tok[0] != "op" or tok[1] != op:
            raise ExpressionSyntaxError(f"unexpected token {tok[1]!r}", tok[2], expected=repr(op))

    def parse(self) -> Expression:
        node = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ExpressionSyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self) -> Expression:
        node = self.term()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] in "+-":
            self.next()
            node = BinOp(tok[1], node, self.term())
        return node

    def term(self) -> Expression:
        node = self.unary()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] in "*/":
            self.next()
            right = self.unary()
            if tok[1] == "/" and _is_literal_zero(right):
                raise ExpressionSyntaxError("division by literal zero", tok[2])
            node = BinOp(tok[1], node, right)
        return node

    def unary(self) -> Expression:
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "-":
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expression:
        node = self.atom()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] == "^":
            self.next()
            node = Pow(node, self.exponent())
        return node

    def exponent(self) -> int:
        sign = 1
        tok = self.next()
        if tok[0] == "op" and tok[1] == "-":
            sign = -1
            tok = self.next()
        if tok[0] != "num" or not re.fullmatch(r"\d+", tok[1]):
            raise ExpressionSyntaxError(
                f"unexpected token {tok[1]!r}", tok[2], expected="integer exponent"
            )
        return sign * int(tok[1])

    def atom(self) -> Expression:
        tok = self.next()
        kind, text, pos = tok
        if kind == "num":
            return Num(Fraction(Decimal(text)), text)
        if kind == "name":
            if text == "t":
                return Param()
            if text in FUNCTIONS:
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Func(text, arg)
            raise UnknownSymbolError(text, pos)
        if kind == "op" and text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExpressionSyntaxError(f"unexpected token {text!r}", pos)


def _is_literal_zero(node: Expression) -> bool:
    while isinstance(node, Neg):
        node = node.arg
    return isinstance(node, Num) and node.value == 0


def parse_expression(src: str) -> Expression:
    """Parse an expression string into its syntax tree."""
    if not src or not src.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    return _Parser(src).parse()


def uses_parameter(node: Expression) -> bool:
    if isinstance(node, Param):
        return True
    if isinstance(node, Neg):
        return uses_parameter(node.arg)
    if isinstance(node, BinOp):
        return uses_parameter(node.left) or uses_parameter(node.right)
    if isinstance(node, Pow):
        return uses_parameter(node.base)
    if isinstance(node, Func):
        return uses_parameter(node.arg)
    return False


def is_rational_expression(node: Expression) -> bool:
    """True when the tree uses only rational-closed operations (no sqrt/sin/cos)."""
    if isinstance(node, Func):
        return False
    if isinstance(node, Neg):
        return is_rational_expression(node.arg)
    if isinstance(node, BinOp):
        return is_rational_expression(node.left) and is_rational_expression(node.right)
    if isinstance(node, Pow):
        return is_rational_expression(node.base)
    return True


def _exact_sqrt(value: Fraction) -> Fraction:
    if value < 0:
        raise ExactUnsupportedError("square root of a negative number")
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ExactUnsupportedError(f"sqrt({value}) is irrational")
    return Fraction(rn, rd)


def evaluate(node: Expression, t: Scalar | None = None, mode: Mode = Mode.APPROX) -> Scalar:
    """Evaluate an expression tree at parameter value ``t``.

    Exact mode produces a :class:`Fraction` and rejects any irrational
    subexpression; approximate mode evaluates with IEEE doubles.
    """
    exact = mode is Mode.EXACT

    def ev(n: Expression) -> Scalar:
        if isinstance(n, Num):
            return n.value if exact else float(n.value)
        if isinstance(n, Param):
            if t is None:
                raise UnknownSymbolError("t")
            if exact:
                if isinstance(t, float):
                    raise ExactUnsupportedError("exact evaluation needs a rational t")
                return Fraction(t)
            return float(t)
        if isinstance(n, Neg):
            return -ev(n.arg)
        if isinstance(n, BinOp):
            left, right = ev(n.left), ev(n.right)
            if n.op == "+":
                return left + right
            if n.op == "-":
                return left - right
            if n.op == "*":
                return left * right
            if right == 0:
                raise DivisionByZeroError(f"division by zero in {unparse(n)}")
            return left / right
        if isinstance(n, Pow):
            base = ev(n.base)
            if base == 0 and n.exponent < 0:
                raise DivisionByZeroError("zero raised to a negative power")
            return base**n.exponent
        if isinstance(n, Func):
            arg = ev(n.arg)
            if exact:
                if n.name == "sqrt":
                    return _exact_sqrt(arg)
                if arg == 0:
                    return Fraction(0) if n.name == "sin" else Fraction(1)
                raise ExactUnsupportedError(f"{n.name}({arg}) is irrational")
            return getattr(math, n.name)(arg)
        raise TypeError(f"not an expression node: {n!r}")

    return ev(node)


_LEVEL_ADD, _LEVEL_MUL, _LEVEL_NEG, _LEVEL_POW, _LEVEL_ATOM = 10, 20, 30, 40, 50


def _level(node: Expression) -> int:
    if isinstance(node, BinOp):
        return _LEVEL_ADD if node.op in "+-" else _LEVEL_MUL
    if isinstance(node, Neg):
        return _LEVEL_NEG
    if isinstance(node, Pow):
        return _LEVEL_POW
    return _LEVEL_ATOM


def unparse(node: Expression) -> str:
    """Render a tree back to source text; reparsing yields the same tree."""
    if isinstance(node, Num):
        return node.lexeme
    if isinstance(node, Param):
        return "t"
    if isinstance(node, Neg):
        inner = unparse(node.arg)
        if _level(node.arg) < _LEVEL_NEG:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, BinOp):
        lhs, rhs = unparse(node.left), unparse(node.right)
        mine = _level(node)
        if _level(node.left) < mine:
            lhs = f"({lhs})"
        # same-level right operands re-associate, so they need parentheses
        if _level(node.right) <= mine:
            rhs = f"({rhs})"
        return f"{lhs}{node.op}{rhs}"
    if isinstance(node, Pow):
        base = unparse(node.base)
        if _level(node.base) < _LEVEL_POW:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Func):
        return f"{node.name}({unparse(node.arg)})"
    raise TypeError(f"not an expression node: {node!r}")


def number(value: Fraction | int) -> Expression:
    """Expression node for a rational constant, in parser-canonical shape."""
    frac = Fraction(value)
    if frac < 0:
        return Neg(number(-frac))
    if frac.denominator == 1:
        return Num(frac, str(frac.numerator))
    return BinOp(
        "/",
        Num(Fraction(frac.numerator), str(frac.numerator)),
        Num(Fraction(frac.denominator), str(frac.denominator)),
    )


# ---------------------------------------------------------------------------
# Rational-function normal form, used to certify parametrized motions whose
# coordinates are rational in t.  A polynomial is a coefficient list
# (ascending powers) over Fraction; a rational function is a (num, den) pair.


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _poly_trim(out)


def _poly_neg(a):
    return [-c for c in a]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _poly_trim(out)


_ONE = [Fraction(1)]


def to_rational_function(node: Expression) -> tuple[list[Fraction], list[Fraction]]:
    """Normalize a rational-in-t expression into a numerator/denominator pair.

    Raises ExactUnsupportedError on sqrt/sin/cos and DivisionByZeroError when
    a denominator is identically zero.
    """
    if isinstance(node, Num):
        return ([node.value] if node.value else [], list(_ONE))
    if isinstance(node, Param):
        return ([Fraction(0), Fraction(1)], list(_ONE))
    if isinstance(node, Neg):
        num, den = to_rational_function(node.arg)
        return (_poly_neg(num), den)
    if isinstance(node, BinOp):
        ln, ld = to_rational_function(node.left)
        rn, rd = to_rational_function(node.right)
        if node.op == "+":
            return (_poly_add(_poly_mul(ln, rd), _poly_mul(rn, ld)), _poly_mul(ld, rd))
        if node.op == "-":
            return (_poly_add(_poly_mul(ln, rd), _poly_neg(_poly_mul(rn, ld))), _poly_mul(ld, rd))
        if node.op == "*":
            return (_poly_mul(ln, rn), _poly_mul(ld, rd))
        if not rn:
            raise DivisionByZeroError("division by an identically zero expression")
        return (_poly_mul(ln, rd), _poly_mul(ld, rn))
    if isinstance(node, Pow):
        bn, bd = to_rational_function(node.base)
        e = node.exponent
        if e < 0:
            if not bn:
                raise DivisionByZeroError("zero raised to a negative power")
            bn, bd, e = bd, bn, -e
        num, den = list(_ONE), list(_ONE)
        for _ in range(e):
            num = _poly_mul(num, bn)
            den = _poly_mul(den, bd)
        return (num, den)
    raise ExactUnsupportedError(f"{unparse(node)} is not rational in t")
