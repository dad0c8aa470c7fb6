"""Plain-text format for polynomial systems.

::

    vars: x1 x2 x3        # descending: x1 > x2 > x3
    order: degrevlex      # or lex (optional, degrevlex by default)
    polys:
    x1^2*x3
    x1*x2 - x1

One polynomial per line. Tokens: variable names, `^` integer exponent,
`*` product, `+`/`-`, and integer or `a/b` rational coefficients. Blank
lines and `#` comments are ignored.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .poly import DEGREVLEX, LEX, PolyRing, mono_mul


class ParseError(ValueError):
    def __init__(self, message, line, column=None):
        at = f"line {line}" if column is None else f"line {line}, col {column}"
        super().__init__(f"{at}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|\d+|[*^+/-]|\S")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def _tokenize(text, lineno):
    tokens = []
    for match in _TOKEN.finditer(text):
        tok = match.group()
        col = match.start() + 1
        if not (_NAME.match(tok) or tok.isdigit() or tok in "*^+/-"):
            raise ParseError(f"unexpected character {tok!r}", lineno, col)
        tokens.append((tok, col))
    return tokens


class _PolyParser:
    def __init__(self, ring, tokens, lineno):
        self.ring = ring
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        tok, col = self.tokens[self.pos]
        self.pos += 1
        return tok, col

    def fail(self, message):
        col = self.tokens[self.pos][1] if self.pos < len(self.tokens) else (
            self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1
        )
        raise ParseError(message, self.lineno, col)

    def parse(self):
        terms = {}
        sign = 1
        if self.peek() in ("+", "-"):
            tok, _ = self.take()
            sign = -1 if tok == "-" else 1
        while True:
            mono, coeff = self.term()
            coeff *= sign
            s = terms.get(mono, 0) + coeff
            if s:
                terms[mono] = s
            elif mono in terms:
                del terms[mono]
            nxt = self.peek()
            if nxt is None:
                break
            if nxt not in ("+", "-"):
                self.fail(f"expected '+' or '-', found {nxt!r}")
            tok, _ = self.take()
            sign = -1 if tok == "-" else 1
        return self.ring.poly(terms)

    def term(self):
        mono = (0,) * self.ring.n
        coeff = Fraction(1)
        saw_factor = False
        while True:
            tok = self.peek()
            if tok is None or tok in ("+", "-"):
                break
            if saw_factor:
                if tok != "*":
                    self.fail(f"expected '*' between factors, found {tok!r}")
                self.take()
            m, c = self.factor()
            mono = mono_mul(mono, m) if m is not None else mono
            coeff *= c
            saw_factor = True
        if not saw_factor:
            self.fail("empty term")
        if coeff.denominator == 1:
            coeff = coeff.numerator
        return mono, coeff

    def factor(self):
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of polynomial")
        if tok.isdigit():
            num, _ = self.take()
            value = Fraction(int(num))
            if self.peek() == "/":
                self.take()
                den = self.peek()
                if den is None or not den.isdigit():
                    self.fail("expected an integer denominator after '/'")
                self.take()
                if int(den) == 0:
                    self.fail("zero denominator")
                value /= int(den)
            return None, value
        if _NAME.match(tok):
            name, col = self.take()
            if name not in self.ring.names:
                raise ParseError(f"unknown variable {name!r}", self.lineno, col)
            e = 1
            if self.peek() == "^":
                self.take()
                exp = self.peek()
                if exp is None or not exp.isdigit():
                    self.fail("expected an integer exponent after '^'")
                self.take()
                e = int(exp)
            m = [0] * self.ring.n
            m[self.ring.index(name)] = e
            return tuple(m), Fraction(1)
        self.fail(f"unexpected token {tok!r}")


def parse_poly(text, ring, lineno=1):
    tokens = _tokenize(text, lineno)
    if not tokens:
        raise ParseError("empty polynomial", lineno)
    return _PolyParser(ring, tokens, lineno).parse()


def parse_system(text):
    """Parse a full system file; returns (ring, polynomials)."""
    ring = None
    order = DEGREVLEX
    names = None
    polys = []
    in_polys = False
    lineno = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            if names is not None:
                raise ParseError("duplicate 'vars:' line", lineno)
            names = line[len("vars:") :].split()
            if not names:
                raise ParseError("'vars:' lists no variables", lineno)
            continue
        if line.startswith("order:"):
            kind = line[len("order:") :].strip()
            if kind not in (DEGREVLEX, LEX):
                raise ParseError(f"unknown ordering {kind!r}", lineno)
            order = kind
            continue
        if line.startswith("polys:"):
            if names is None:
                raise ParseError("'polys:' before 'vars:'", lineno)
            ring = PolyRing(names, order)
            in_polys = True
            rest = line[len("polys:") :].strip()
            if rest:
                polys.append(parse_poly(rest, ring, lineno))
            continue
        if not in_polys:
            raise ParseError("expected 'vars:', 'order:' or 'polys:'", lineno)
        polys.append(parse_poly(line, ring, lineno))
    if ring is None:
        raise ParseError("missing 'polys:' section", lineno)
    return ring, polys


def format_system(ring, polys):
    lines = [f"vars: {' '.join(ring.names)}", f"order: {ring.order.kind}", "polys:"]
    lines.extend(str(f) for f in polys)
    return "\n".join(lines) + "\n"
