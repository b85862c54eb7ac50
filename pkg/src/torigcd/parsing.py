"""Text grammar for polynomials and rational functions.

Variables are x0..x9 (multivariate) or z (univariate); literals are integers
or rationals (3, 3/2); operators are + - * / ^ with parentheses.  Univariate
input evaluates in the rational-function field, so (z^2-1)/(z+1) is accepted
anywhere; multivariate input may divide by constants only.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .multipoly import MultiPoly
from .ratfunc import Place, RationalFunction
from .unipoly import UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d)|(z)|([-+*/^()]))")


def _tokenize(text: str) -> "list[str]":
    tokens = []
    text = text.strip()
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at column {pos}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent evaluator over an algebra of constants and variables."""

    def __init__(self, tokens, algebra):
        self.tokens = tokens
        self.pos = 0
        self.alg = algebra

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input near {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else self.alg.div(value, rhs)
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        value = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer literal")
            value = value ** int(tok)
        return value

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return self.alg.const(Fraction(int(tok)))
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ParseError("expected closing parenthesis")
            return value
        if tok == ")":
            raise ParseError("unbalanced closing parenthesis")
        if tok in "+-*/^":
            raise ParseError(f"misplaced operator {tok!r}")
        return self.alg.var(tok)


class _UniAlgebra:
    """Full field arithmetic in the univariate rational-function field."""

    def const(self, c: Fraction) -> RationalFunction:
        return RationalFunction.constant(c)

    def var(self, name: str) -> RationalFunction:
        if name != "z":
            raise ParseError(f"unknown univariate variable {name!r} (use z)")
        return RationalFunction(UniPoly.monomial(1))

    def div(self, a: RationalFunction, b: RationalFunction) -> RationalFunction:
        if b.is_zero():
            raise ParseError("division by zero")
        return a / b


class _MultiAlgebra:
    """Polynomial arithmetic where division is restricted to constants."""

    def __init__(self, nvars: int, first_index: int):
        self.nvars = nvars
        self.first_index = first_index

    def const(self, c: Fraction) -> MultiPoly:
        return MultiPoly.constant(self.nvars, c)

    def var(self, name: str) -> MultiPoly:
        if name == "z":
            raise ParseError("variable z is univariate; use x<digit> here")
        axis = int(name[1]) - self.first_index
        if not 0 <= axis < self.nvars:
            last = self.first_index + self.nvars - 1
            raise ParseError(
                f"variable {name} outside x{self.first_index}..x{last}"
            )
        return MultiPoly.variable(self.nvars, axis)

    def div(self, a: MultiPoly, b: MultiPoly) -> MultiPoly:
        if b.is_zero():
            raise ParseError("division by zero")
        if not b.is_constant():
            raise ParseError("multivariate division only by nonzero constants")
        return a / b.as_constant()


def parse_ratfunc(text: str) -> RationalFunction:
    """Parse a univariate rational function in z."""
    return _Parser(_tokenize(text), _UniAlgebra()).parse()


def parse_unipoly(text: str) -> UniPoly:
    """Parse univariate input that must reduce to a polynomial."""
    f = parse_ratfunc(text)
    if not f.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial")
    return f.num


def parse_multipoly(text: str, nvars: int, first_index: int = 0) -> MultiPoly:
    """Parse a polynomial in x<first_index>..x<first_index + nvars - 1>."""
    return _Parser(_tokenize(text), _MultiAlgebra(nvars, first_index)).parse()


def infer_homogeneous_nvars(*texts: str) -> int:
    """Number of variables x0..xn mentioned across homogeneous inputs."""
    top = -1
    for text in texts:
        for m in re.finditer(r"x(\d)", text):
            top = max(top, int(m.group(1)))
    if top < 0:
        raise ParseError("no x-variables found in homogeneous input")
    return top + 1


def parse_place(text: str) -> Place:
    """Parse 'inf' or a univariate polynomial naming a finite place."""
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return Place.infinity()
    return Place.finite(parse_unipoly(text))


def parse_rational(text: str) -> Fraction:
    """Parse an integer, p/q, or exact decimal literal."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc
