"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace-insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := ('+' | '-') factor | power
    power   := atom ('^' INT)?
    atom    := RATIONAL | VAR | '(' expr ')'
    RATIONAL:= INT ('/' INT)?

Variables are z1, z2 (bivariate) or t (univariate parametrizations).
Rational literals only; '/' is legal solely between integer literals.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .polys import Poly1, Poly2

MAX_EXPONENT = 128

_TOKEN_CHARS = {"+", "-", "*", "^", "(", ")", "/"}


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", i, int(text[i:j])))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", i, text[i:j]))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: dict):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables
        self.one = next(iter(variables.values())) ** 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[1])
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", tok[1])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self):
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.advance()
            inner = self.factor()
            return inner if tok[0] == "+" else -inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            caret = self.advance()
            tok = self.advance()
            if tok[0] != "int":
                raise ParseError("exponent must be a nonnegative integer",
                                 tok[1] if len(tok) > 1 else caret[1])
            e = tok[2]
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds the bound {MAX_EXPONENT}",
                                 tok[1])
            return base ** e
        return base

    def atom(self):
        tok = self.advance()
        if tok[0] == "int":
            value = Fraction(tok[2])
            if self.peek()[0] == "/":
                self.advance()
                den = self.advance()
                if den[0] != "int":
                    raise ParseError(
                        "'/' is only allowed between integer literals", den[1])
                if den[2] == 0:
                    raise ParseError("zero denominator", den[1])
                value = Fraction(tok[2], den[2])
            return self.one * value
        if tok[0] == "name":
            var = self.variables.get(tok[2])
            if var is None:
                raise ParseError(
                    f"unknown variable {tok[2]!r} (expected one of "
                    f"{sorted(self.variables)})", tok[1])
            return var
        if tok[0] == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {tok[0]!r}", tok[1])


def parse_expression(text: str) -> Poly2:
    """Parse a bivariate polynomial in z1, z2."""
    variables = {"z1": Poly2.variable(1), "z2": Poly2.variable(2)}
    return _Parser(text, variables).parse()


def parse_parameter_expression(text: str) -> Poly1:
    """Parse a univariate polynomial in the branch parameter t."""
    variables = {"t": Poly1([0, 1])}
    return _Parser(text, variables).parse()


def poly_to_text(p: Poly2) -> str:
    """Deterministic textual form that re-parses to the same polynomial."""
    if p.is_zero():
        return "0"
    parts = []
    for (i, j), c in sorted(p.coeff.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), kv[0])):
        factors = []
        if c.denominator == 1:
            coef = str(abs(c.numerator))
        else:
            coef = f"{abs(c.numerator)}/{c.denominator}"
        if coef != "1" or (i == 0 and j == 0):
            factors.append(coef)
        if i:
            factors.append("z1" if i == 1 else f"z1^{i}")
        if j:
            factors.append("z2" if j == 1 else f"z2^{j}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, "*".join(factors)))
    first_sign, first = parts[0]
    text = (("-" if first_sign == "-" else "") + first)
    for sign, chunk in parts[1:]:
        text += f" {sign} {chunk}"
    return text
