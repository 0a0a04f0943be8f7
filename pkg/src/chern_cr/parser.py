"""Recursive-descent parser for invariant polynomials.

Grammar (loosest binding first)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := NUMBER ('/' NUMBER)? | VAR | '(' expr ')'
    VAR     := 'ch' INT | 'c' INT

Chern classes ``c_k`` are rewritten into Chern characters with Newton's
identities, so the result is always a polynomial in ``ch1..ch{n+1}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .charclass import ChVector, ch_to_chern
from .exact import Poly
from .invariants import DegreeError, InvPoly, invariant_ring


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at byte offset {offset})")


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    kind: str  # "c" or "ch"
    index: int
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>[0-9]+(?:/[0-9]+)?)|(?P<var>ch[0-9]+|c[0-9]+)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    raw = text.encode("utf-8")
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", len(text[:pos].encode("utf-8")))
        kind = m.lastgroup
        start = m.start(kind)
        # reject identifiers like "ch2x" or "c1d"
        if kind == "var" and m.end() < len(text) and (text[m.end()].isalnum() or text[m.end()] == "_"):
            j = m.end()
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            raise ParseError(f"unknown variable {text[start:j]!r}", len(text[:start].encode("utf-8")))
        tokens.append((kind, m.group(kind), len(text[:start].encode("utf-8"))))
        pos = m.end()
    tokens.append(("end", "", len(raw)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, off = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", off)

    def parse(self) -> Expr:
        node = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", off)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, off = self.take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer literal", off)
            node = Pow(node, int(val))
        return node

    def atom(self) -> Expr:
        kind, val, off = self.take()
        if kind == "num":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", off)
            return Num(Fraction(int(num), int(den) if den else 1))
        if kind == "var":
            prefix = "ch" if val.startswith("ch") else "c"
            return Var(prefix, int(val[len(prefix):]), off)
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {val or 'end of input'!r}", off)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def _evaluate(node: Expr, n: int, chern: list[Poly]) -> Poly:
    R = invariant_ring(n)
    if isinstance(node, Num):
        return R.constant(node.value)
    if isinstance(node, Var):
        if not 1 <= node.index <= n + 1:
            raise ParseError(f"variable {node.kind}{node.index} out of range 1..{n + 1}", node.offset)
        return R.gen(f"ch{node.index}") if node.kind == "ch" else chern[node.index]
    if isinstance(node, Neg):
        return -_evaluate(node.operand, n, chern)
    if isinstance(node, Pow):
        return _evaluate(node.base, n, chern) ** node.exponent
    left = _evaluate(node.left, n, chern)
    right = _evaluate(node.right, n, chern)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse_invariant_poly(text: str, n: int) -> InvPoly:
    """Parse ``text`` into an invariant polynomial of degree at most ``n``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    R = invariant_ring(n)
    chern = ch_to_chern(ChVector((Fraction(n + 1),) + R.gens()))
    poly = _evaluate(parse_expr(text), n, chern)
    if poly.degree() > n:
        raise DegreeError(f"weighted degree {poly.degree()} > {n}")
    return InvPoly(poly, n)
