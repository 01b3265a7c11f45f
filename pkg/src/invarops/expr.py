"""Recursive-descent parser for algebra expressions.

Grammar (left-associative, '^' binds tightest):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | ident | factor '^' uint | '(' expr ')'

Rational literals are 'p' or 'p/q'. Products preserve factor order; the
consuming command decides whether the interpretation is commutative or
word-like, so one AST serves both the polynomial and the operator side.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .lie import CosetSetup
from .sympoly import SymPoly


class ExprError(ValueError):
    """Syntax or resolution error, carrying the byte offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)


def tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            at = len(text) - len(stripped)
            if not stripped:
                break
            raise ExprError(f"unexpected character {stripped[0]!r}", at)
        if m.group("num") is not None:
            tokens.append(("num", Fraction(m.group("num")), m.start("num")))
        elif m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append((m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, known_names):
        self.tokens = tokens
        self.i = 0
        self.known = set(known_names) if known_names is not None else None

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise ExprError(f"expected {kind!r}, found {tok[1]!r}" if tok[1] is not None
                            else f"expected {kind!r}, found end of input", tok[2])
        return self.advance()

    def parse_expr(self):
        node = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.parse_term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek()[0] == "*":
            self.advance()
            rhs = self.parse_factor()
            node = ("mul", node, rhs)
        return node

    def parse_factor(self):
        tok = self.peek()
        if tok[0] == "num":
            self.advance()
            node = ("num", tok[1])
        elif tok[0] == "ident":
            self.advance()
            if self.known is not None and tok[1] not in self.known:
                raise ExprError(f"unknown identifier {tok[1]!r}", tok[2])
            node = ("var", tok[1])
        elif tok[0] == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
        else:
            msg = ("unexpected end of input" if tok[0] == "end"
                   else f"unexpected token {tok[1]!r}")
            raise ExprError(msg, tok[2])
        while self.peek()[0] == "^":
            self.advance()
            etok = self.peek()
            if etok[0] != "num" or etok[1].denominator != 1 or etok[1] < 0:
                raise ExprError("exponent must be a nonnegative integer", etok[2])
            self.advance()
            node = ("pow", node, int(etok[1]))
        return node


def parse_expr(text: str, known_names=None):
    """Parse to an AST; identifiers must be in known_names when given."""
    parser = _Parser(tokenize(text), known_names)
    node = parser.parse_expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ExprError(f"unexpected token {tok[1]!r}", tok[2])
    return node


def render_ast(node) -> str:
    """Serialize an AST back to parseable text with minimal parentheses."""
    kind = node[0]
    if kind == "num":
        return str(node[1])
    if kind == "var":
        return node[1]
    if kind in ("add", "sub"):
        left = render_ast(node[1])
        right = render_ast(node[2])
        if kind == "sub" and node[2][0] in ("add", "sub"):
            right = f"({right})"
        return f"{left} {'+' if kind == 'add' else '-'} {right}"
    if kind == "mul":
        left = render_ast(node[1])
        right = render_ast(node[2])
        if node[1][0] in ("add", "sub"):
            left = f"({left})"
        if node[2][0] in ("add", "sub"):
            right = f"({right})"
        return f"{left}*{right}"
    if kind == "pow":
        base = render_ast(node[1])
        if node[1][0] not in ("num", "var"):
            base = f"({base})"
        return f"{base}^{node[2]}"
    raise ValueError(f"unknown node kind {kind!r}")


def words_of_ast(node) -> list[tuple[Fraction, tuple[str, ...]]]:
    """Noncommutative reading: expand into (coefficient, word-of-names)
    pairs with factor order preserved, combining like words."""

    def rec(nd) -> dict[tuple[str, ...], Fraction]:
        kind = nd[0]
        if kind == "num":
            return {(): nd[1]}
        if kind == "var":
            return {(nd[1],): Fraction(1)}
        if kind in ("add", "sub"):
            out = dict(rec(nd[1]))
            sign = 1 if kind == "add" else -1
            for w, c in rec(nd[2]).items():
                out[w] = out.get(w, Fraction(0)) + sign * c
            return out
        if kind == "mul":
            left, right = rec(nd[1]), rec(nd[2])
            out: dict[tuple[str, ...], Fraction] = {}
            for wl, cl in left.items():
                for wr, cr in right.items():
                    w = wl + wr
                    out[w] = out.get(w, Fraction(0)) + cl * cr
            return out
        if kind == "pow":
            out = {(): Fraction(1)}
            base = rec(nd[1])
            for _ in range(nd[2]):
                nxt: dict[tuple[str, ...], Fraction] = {}
                for wl, cl in out.items():
                    for wr, cr in base.items():
                        w = wl + wr
                        nxt[w] = nxt.get(w, Fraction(0)) + cl * cr
                out = nxt
            return out
        raise ValueError(f"unknown node kind {kind!r}")

    return [(c, w) for w, c in rec(node).items() if c]


def poly_of_ast(node, variables: dict[str, SymPoly], parent) -> SymPoly:
    """Commutative reading: evaluate in the symmetric algebra, mapping
    each identifier through `variables`."""
    kind = node[0]
    if kind == "num":
        return SymPoly(parent, {(0,) * parent.dim: node[1]})
    if kind == "var":
        return variables[node[1]]
    if kind == "add":
        return poly_of_ast(node[1], variables, parent) + poly_of_ast(node[2], variables, parent)
    if kind == "sub":
        return poly_of_ast(node[1], variables, parent) - poly_of_ast(node[2], variables, parent)
    if kind == "mul":
        return poly_of_ast(node[1], variables, parent) * poly_of_ast(node[2], variables, parent)
    if kind == "pow":
        return poly_of_ast(node[1], variables, parent) ** node[2]
    raise ValueError(f"unknown node kind {kind!r}")


def setup_vocabulary(setup: CosetSetup) -> dict[str, list]:
    """Identifier table for expressions over a setup: original basis names
    map to standard basis vectors, adapted names to the adapted vectors.
    Name reuse is consistent by setup validation."""
    from . import linalg

    vocab: dict[str, list] = {}
    for i, nm in enumerate(setup.algebra.names):
        vocab[nm] = linalg.unit(setup.n, i)
    for nm, v in zip(setup.adapted_names, setup.adapted_vectors):
        vocab.setdefault(nm, list(v))
    return vocab
