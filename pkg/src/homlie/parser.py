"""Recursive-descent parser for scalar and Laurent expressions.

Grammar (precedence ^ > unary - > * / > + -):

    expr    :=  term (('+' | '-') term)*
    term    :=  unary (('*' | '/') unary)*
    unary   :=  '-' unary | power
    power   :=  atom ('^' int)?          exponents are integer literals
    atom    :=  int | 'p' | 'q' | 't' | '(' expr ')'

``parse_scalar`` rejects t; ``parse_laurent`` builds elements of the
Laurent ring, where '/' requires an exactly-dividing (in practice
scalar or unit) divisor.  Errors carry the offending position.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, ExprSyntaxError, NotDivisible
from .laurent import LaurentPoly, exact_div
from .scalar import Scalar


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []  # (kind, value, pos)
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j], i))
                i = j
                continue
            if ch in "pqt":
                self.tokens.append(("var", ch, i))
                i += 1
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ExprSyntaxError(i, "digit, variable or operator",
                                  f"at position {i}: unexpected character {ch!r}")
        self.tokens.append(("end", "", n))
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            raise ExprSyntaxError(tok[2], kind)
        return self.next()


class _Parser:
    """Evaluates directly into the target domain; ``allow_t`` selects
    between the scalar field and the Laurent ring."""

    def __init__(self, text: str, allow_t: bool):
        self.toks = _Tokens(text)
        self.allow_t = allow_t

    def parse(self):
        value = self.expr()
        tok = self.toks.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(tok[2], "end of input")
        return value

    def expr(self):
        value = self.term()
        while self.toks.peek()[0] in ("+", "-"):
            op = self.toks.next()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.toks.peek()[0] in ("*", "/"):
            op, _, pos = self.toks.next()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                value = self._divide(value, rhs, pos)
        return value

    def unary(self):
        if self.toks.peek()[0] == "-":
            self.toks.next()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.toks.peek()[0] == "^":
            self.toks.next()
            sign = 1
            if self.toks.peek()[0] == "-":
                self.toks.next()
                sign = -1
            tok = self.toks.expect("int")
            return base ** (sign * int(tok[1]))
        return base

    def atom(self):
        kind, value, pos = self.toks.next()
        if kind == "int":
            n = int(value)
            return LaurentPoly.from_int(n) if self.allow_t else Scalar.from_int(n)
        if kind == "var":
            if value == "p":
                s = Scalar.p()
            elif value == "q":
                s = Scalar.q()
            else:
                if not self.allow_t:
                    raise ExprSyntaxError(pos, "a scalar expression (t not allowed)")
                return LaurentPoly.t()
            return LaurentPoly.from_scalar(s) if self.allow_t else s
        if kind == "(":
            inner = self.expr()
            self.toks.expect(")")
            return inner
        raise ExprSyntaxError(pos, "integer, variable or parenthesis")

    def _divide(self, a, b, pos: int):
        if not self.allow_t:
            if b.is_zero():
                raise DivisionByZero("division by zero in expression")
            return a / b
        if b.is_zero():
            raise DivisionByZero("division by zero in expression")
        if b.is_unit():
            return a * b.unit_inverse()
        try:
            return exact_div(a, b)
        except NotDivisible:
            raise ExprSyntaxError(pos, "an exactly dividing divisor",
                                  f"at position {pos}: inexact division") from None


def parse_scalar(text: str) -> Scalar:
    return _Parser(text, allow_t=False).parse()


def parse_laurent(text: str) -> LaurentPoly:
    return _Parser(text, allow_t=True).parse()


def parse_rational(text: str) -> Fraction:
    """Rational literals for specialization points: '3', '-1/2'."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ExprSyntaxError(0, "a rational number like 2 or -1/2", str(exc)) from None
