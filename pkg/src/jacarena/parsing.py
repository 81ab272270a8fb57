"""Text grammar for rings and polynomial expressions.

    ring  := base vars? quot?
    base  := "ZZ" | "QQ" | "GF(" integer ")"
    vars  := "[" ident ("," ident)* "]"
    quot  := "/(" poly ("," poly)* ")" | "/" poly
    poly  := the usual +, -, *, ^ with parentheses, integer literals and
             identifiers; "/" divides by an invertible constant so that
             rational coefficients round-trip.
"""

from __future__ import annotations

from .algebra import GF, QQ, ZZ, Polynomial
from .errors import RingSyntaxError, UnknownVariable


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos

    def __repr__(self):
        return f"_Token({self.kind}, {self.text!r}, {self.pos})"


_PUNCT = set("+-*/^(),[]")


def _tokenize(text):
    tokens = []
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
            tokens.append(_Token("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
        elif ch in _PUNCT:
            tokens.append(_Token(ch, ch, i))
            i += 1
        else:
            raise RingSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, ring, vars):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.vars = tuple(vars)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok.kind != kind:
            raise RingSyntaxError(f"expected {kind!r}, found {tok.text or 'end'!r}", tok.pos)
        self.i += 1
        return tok

    def parse_poly(self):
        result = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.parse_term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def parse_term(self):
        result = self.parse_signed()
        while self.peek().kind in ("*", "/"):
            op = self.take().kind
            rhs = self.parse_signed()
            if op == "*":
                result = result * rhs
            else:
                result = self._divide(result, rhs)
        return result

    def _divide(self, lhs, rhs):
        tok = self.tokens[self.i - 1]
        if not rhs.is_constant() or rhs.is_zero():
            raise RingSyntaxError("divisor must be a nonzero constant", tok.pos)
        value = rhs.constant_value()
        try:
            inv = self.ring.invert(value)
        except ZeroDivisionError:
            try:
                return Polynomial(
                    lhs.ring,
                    lhs.vars,
                    {m: self.ring.exact_div(c, value) for m, c in lhs.terms.items()},
                )
            except ValueError as exc:
                raise RingSyntaxError(str(exc), tok.pos) from None
        return lhs.scale(inv)

    def parse_signed(self):
        if self.peek().kind == "-":
            self.take()
            return -self.parse_signed()
        if self.peek().kind == "+":
            self.take()
            return self.parse_signed()
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        while self.peek().kind == "^":
            self.take()
            exp = self.take("int")
            base = base ** int(exp.text)
        return base

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return Polynomial.constant(self.ring, int(tok.text), self.vars)
        if tok.kind == "ident":
            self.take()
            if tok.text not in self.vars:
                raise UnknownVariable(f"unknown variable {tok.text!r}", tok.pos)
            return Polynomial.variable(self.ring, tok.text, self.vars)
        if tok.kind == "(":
            self.take()
            inner = self.parse_poly()
            self.take(")")
            return inner
        raise RingSyntaxError(f"unexpected {tok.text or 'end'!r}", tok.pos)

    def expect_end(self):
        tok = self.peek()
        if tok.kind != "end":
            raise RingSyntaxError(f"trailing input {tok.text!r}", tok.pos)


def parse_polynomial(text, ring, vars):
    """Parse an expression into a raw Polynomial over the given variables."""
    parser = _Parser(text, ring, vars)
    poly = parser.parse_poly()
    parser.expect_end()
    return poly.remap(tuple(vars))


def parse_ring(text):
    """Parse a ring presentation such as ``ZZ[x,y]/(x^2+1)``, ``GF(5)[x]`` or ``ZZ/4``."""
    from .rings import RingPresentation

    tokens = _tokenize(text)
    i = 0

    def take(kind=None):
        nonlocal i
        tok = tokens[i]
        if kind is not None and tok.kind != kind:
            raise RingSyntaxError(f"expected {kind!r}, found {tok.text or 'end'!r}", tok.pos)
        i += 1
        return tok

    base_tok = take("ident")
    if base_tok.text == "ZZ":
        base = ZZ
    elif base_tok.text == "QQ":
        base = QQ
    elif base_tok.text == "GF":
        take("(")
        p_tok = take("int")
        take(")")
        try:
            base = GF(int(p_tok.text))
        except ValueError as exc:
            raise RingSyntaxError(str(exc), p_tok.pos) from None
    else:
        raise RingSyntaxError(f"unknown base ring {base_tok.text!r}", base_tok.pos)

    vars = []
    if tokens[i].kind == "[":
        take("[")
        vars.append(take("ident").text)
        while tokens[i].kind == ",":
            take(",")
            name = take("ident").text
            if name in vars:
                raise RingSyntaxError(f"duplicate variable {name!r}", tokens[i - 1].pos)
            vars.append(name)
        take("]")
    vars = tuple(vars)

    relations = []
    if tokens[i].kind == "/":
        take("/")
        rest_pos = tokens[i].pos
        rest = text[rest_pos:]
        if tokens[i].kind == "(":
            inner = rest.strip()
            if not inner.endswith(")"):
                raise RingSyntaxError("unterminated relation list", rest_pos)
            parts = _split_top_level(inner[1:-1], rest_pos + 1)
        else:
            parts = [(rest, rest_pos)]
        for part, pos in parts:
            try:
                relations.append(parse_polynomial(part, base, vars))
            except RingSyntaxError as exc:
                raise RingSyntaxError(f"bad relation {part.strip()!r}: {exc}", pos) from None
        i = len(tokens) - 1

    if tokens[i].kind != "end":
        raise RingSyntaxError(f"trailing input {tokens[i].text!r}", tokens[i].pos)

    return RingPresentation(base, vars, relations)


def _split_top_level(text, offset):
    """Split on commas that are not nested inside parentheses."""
    parts = []
    depth = 0
    start = 0
    for j, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise RingSyntaxError("unbalanced parenthesis", offset + j)
        elif ch == "," and depth == 0:
            parts.append((text[start:j], offset + start))
            start = j + 1
    if depth != 0:
        raise RingSyntaxError("unbalanced parenthesis", offset + len(text))
    parts.append((text[start:], offset + start))
    return parts
