"""Text grammar for polynomials.

Grammar (UTF-8): integer literals, identifiers [A-Za-z][A-Za-z0-9]*, the
operators + - * ^ and parentheses.  Multiplication is always explicit
(``4*x*z^3``); exponents are non-negative integer literals.  A leading
unary minus is accepted so printed polynomials round-trip.
"""

from __future__ import annotations

from .errors import ParseError
from .poly import MPoly

MAX_EXPONENT = 2**20


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(src: str):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(_Token("int", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(src) and (src[j].isalnum()):
                j += 1
            tokens.append(_Token("ident", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens, var_index, nvars, mod):
        self.tokens = tokens
        self.pos = 0
        self.var_index = var_index
        self.nvars = nvars
        self.mod = mod

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text!r}", tok.line, tok.col)
        self.pos += 1
        return tok

    def parse_expr(self) -> MPoly:
        tok = self.peek()
        if tok.kind == "-":
            self.take()
            acc = -self.parse_term()
        elif tok.kind == "+":
            self.take()
            acc = self.parse_term()
        else:
            acc = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            term = self.parse_term()
            acc = acc + term if op == "+" else acc - term
        return acc

    def parse_term(self) -> MPoly:
        acc = self.parse_factor()
        while self.peek().kind == "*":
            self.take()
            acc = acc * self.parse_factor()
        return acc

    def parse_factor(self) -> MPoly:
        base = self.parse_base()
        if self.peek().kind == "^":
            self.take()
            tok = self.take("int")
            k = int(tok.text)
            if k > MAX_EXPONENT:
                raise ParseError(f"exponent {k} too large", tok.line, tok.col)
            return base**k
        return base

    def parse_base(self) -> MPoly:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return MPoly.const(self.nvars, int(tok.text), self.mod)
        if tok.kind == "ident":
            self.take()
            if tok.text not in self.var_index:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.line, tok.col)
            return MPoly.variable(self.var_index[tok.text], self.nvars, self.mod)
        if tok.kind == "(":
            self.take()
            inner = self.parse_expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {tok.text!r}", tok.line, tok.col)


def parse_poly(src: str, variables: list[str], mod: int | None = None) -> MPoly:
    """Parse an expression into canonical expanded sparse form.

    ``variables`` fixes both the admissible identifiers and the variable
    order of the result.
    """
    var_index = {}
    for i, name in enumerate(variables):
        if name in var_index:
            raise ValueError(f"duplicate variable name {name!r}")
        var_index[name] = i
    parser = _Parser(_tokenize(src), var_index, len(variables), mod)
    p = parser.parse_expr()
    parser.take("eof")
    return p
