"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := rational | 'i' | 'pi' | var | '(' expr ')'
    var    := 'x' uint | 't'
    rational := uint ('/' uint)?

The optional leading sign is a convenience superset of the published
grammar so that canonical output with a negative first term re-parses.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .mpoly import MPoly


_SYMBOLS = "+-*^()/"


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("WORD", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, dim: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.dim = dim

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return self.advance()

    def parse(self) -> MPoly:
        p = self.parse_expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return p

    def parse_expr(self) -> MPoly:
        negate = False
        if self.peek()[0] in "+-":
            negate = self.advance()[0] == "-"
        acc = self.parse_term()
        if negate:
            acc = -acc
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            rhs = self.parse_term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_term(self) -> MPoly:
        acc = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> MPoly:
        base = self.parse_base()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] != "INT":
                raise ParseError(
                    "exponent must be a nonnegative integer literal", tok[2]
                )
            self.advance()
            base = base ** int(tok[1])
        return base

    def parse_base(self) -> MPoly:
        tok = self.peek()
        kind, value, pos = tok
        if kind == "INT":
            self.advance()
            numer = int(value)
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("INT")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator in rational literal", den_tok[2])
                return MPoly.constant(self.dim, Fraction(numer, den))
            return MPoly.constant(self.dim, Fraction(numer))
        if kind == "WORD":
            self.advance()
            if value == "i":
                return MPoly.imaginary(self.dim)
            if value == "pi":
                return MPoly.pi_symbol(self.dim)
            if value == "t":
                return MPoly.tau(self.dim)
            if value.startswith("x") and value[1:].isdigit():
                index = int(value[1:])
                if 1 <= index <= self.dim:
                    return MPoly.spatial(self.dim, index)
                raise ParseError(
                    f"unknown variable {value!r} (dimension is {self.dim})", pos
                )
            raise ParseError(f"unknown variable {value!r}", pos)
        if kind == "(":
            self.advance()
            inner = self.parse_expr()
            closing = self.peek()
            if closing[0] != ")":
                raise ParseError("expected ')'", closing[2])
            self.advance()
            return inner
        if kind == "EOF":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_poly(text: str, dim: int) -> MPoly:
    """Parse an expression into its canonical polynomial form.

    Raises ParseError (with character position) on malformed input,
    unknown variables and non-literal exponents.
    """
    if dim < 1:
        raise ValueError("dimension must be a positive integer")
    return _Parser(text, dim).parse()
