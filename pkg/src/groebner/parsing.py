"""Text syntax for vector-polynomials.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | var ['^' nat] | 'e' '(' nat ')' | 'e'nat | '(' expr ')' ['^' nat]

``e(i)`` (or ``e<i>``) marks the component; a product holds at most one.
Without a declared variable list the names ``x0, x1, ...`` are accepted.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Optional

from .monomials import variable
from .orders import TermOrder
from .polynomials import (
    Poly,
    constant,
    format_poly,
    is_scalar,
    monomial,
    poly_add,
    poly_mul,
    poly_neg,
    poly_sub,
)


class ParseError(ValueError):
    def __init__(self, msg: str, src: str = "", pos: int = 0, line: int = 1):
        col = pos + 1
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.column = col


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)
_COMPONENT = re.compile(r"e(\d+)\Z")
_AUTO_VAR = re.compile(r"x(\d+)\Z")


def _tokenize(src: str, line: int):
    toks = []
    pos = 0
    n = len(src)
    while pos < n:
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if m is None:
            start = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
            raise ParseError(f"unexpected character {src[start]!r}", src, start, line)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, var_index: Optional[Dict[str, int]], order: TermOrder, line: int):
        self.src = src
        self.line = line
        self.toks = _tokenize(src, line)
        self.i = 0
        self.vars = var_index
        self.order = order

    def error(self, msg, tok=None):
        tok = tok or self.toks[self.i]
        raise ParseError(msg, self.src, tok[2], self.line)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            self.i -= 1
            self.error(f"expected {value!r}")
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = poly_neg(acc)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            t = self.term()
            acc = poly_add(acc, t, self.order) if op == "+" else poly_sub(acc, t, self.order)
        return acc

    def term(self) -> Poly:
        acc, has_comp = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            tok = self.peek()
            f, comp = self.factor()
            if comp and has_comp:
                self.error("more than one component marker in a product", tok)
            if not is_scalar(acc) and not is_scalar(f):
                self.error("product of two vector-valued factors", tok)
            has_comp = has_comp or comp
            acc = poly_mul(acc, f, self.order) if is_scalar(acc) else poly_mul(f, acc, self.order)
        return acc

    def power(self, base: Poly) -> Poly:
        if not (self.peek()[0] == "op" and self.peek()[1] == "^"):
            return base
        self.take()
        tok = self.take()
        if tok[0] != "num" or "/" in tok[1]:
            self.i -= 1
            self.error("expected a natural-number exponent")
        e = int(tok[1])
        if not is_scalar(base):
            self.error("cannot raise a vector-valued factor to a power", tok)
        out = constant(1)
        for _ in range(e):
            out = poly_mul(out, base, self.order)
        return out

    def factor(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            num, _, den = val.partition("/")
            d = int(den) if den else 1
            if d == 0:
                self.i -= 1
                self.error("zero denominator")
            return constant(Fraction(int(num), d)), False
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            comp = not is_scalar(inner)
            return self.power(inner), comp
        if kind == "name":
            if self.vars is not None and val in self.vars:
                idx = self.vars[val]
                return self.power(monomial(1, (variable(idx), 0))), False
            if val == "e" and self.peek()[1] == "(":
                self.take()
                ntok = self.take()
                if ntok[0] != "num" or "/" in ntok[1]:
                    self.i -= 1
                    self.error("expected a component index")
                self.expect(")")
                return constant(1, int(ntok[1])), True
            m = _COMPONENT.match(val)
            if m:
                return constant(1, int(m.group(1))), True
            if self.vars is None:
                m = _AUTO_VAR.match(val)
                if m:
                    return self.power(monomial(1, (variable(int(m.group(1))), 0))), False
            self.i -= 1
            self.error(f"unknown variable {val!r}")
        self.i -= 1
        self.error("expected a number, variable, component or '('")


def _index(vars) -> Optional[Dict[str, int]]:
    if vars is None:
        return None
    if isinstance(vars, dict):
        return dict(vars)
    return {name: i for i, name in enumerate(vars)}


def parse_poly(src: str, vars=None, order: Optional[TermOrder] = None, line: int = 1) -> Poly:
    """Parse ``src`` into a polynomial sorted under ``order`` (lex/POT by default)."""
    return _Parser(src, _index(vars), order or TermOrder(), line).parse()


def names_for(vars) -> Optional[List[str]]:
    """Index-ordered variable names, or None for the default ``x<i>`` names."""
    if vars is None:
        return None
    if isinstance(vars, dict):
        out = [None] * (max(vars.values()) + 1 if vars else 0)
        for k, i in vars.items():
            out[i] = k
        return out
    return list(vars)


def print_poly(p: Poly, vars=None, scalar: Optional[bool] = None) -> str:
    return format_poly(p, names_for(vars), scalar)
