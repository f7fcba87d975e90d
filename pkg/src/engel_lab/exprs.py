"""Bracket-expression parser for the command line.

Grammar::

    expr := term | '[' expr (',' expr)+ ']'
    term := 'z' | 'c' INT | INT '*' expr

Comma chains are left-normed sugar: ``[a,b,c]`` parses as ``[[a,b],c]``.
The AST is a plain nested tuple -- ``("z",)``, ``("c", k)``,
``("scale", k, sub)`` or ``("br", left, right)`` -- so commutator trees
built elsewhere evaluate through the same functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core.elements import CMarker, MixedValue, mixed_bracket, mixed_scale, zelt

Ast = tuple


class ExprError(ValueError):
    """Syntax or symbol error, with 1-based position information."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class _Token:
    kind: str  # "[", "]", ",", "*", "int", "z", "c", "end"
    value: int
    line: int
    col: int


def _tokenize(src: str) -> list[_Token]:
    out: list[_Token] = []
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
        if ch in "[],*":
            out.append(_Token(ch, 0, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            out.append(_Token("int", int(src[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch == "z":
            out.append(_Token("z", 0, line, col))
            i += 1
            col += 1
            continue
        if ch == "c":
            j = i + 1
            while j < len(src) and src[j].isdigit():
                j += 1
            if j == i + 1:
                raise ExprError("expected generator index after 'c'", line, col)
            out.append(_Token("c", int(src[i + 1 : j]), line, col))
            col += j - i
            i = j
            continue
        raise ExprError(f"unknown symbol {ch!r}", line, col)
    out.append(_Token("end", 0, line, col))
    return out


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str):
        tok = self.peek()
        raise ExprError(message, tok.line, tok.col)

    def expr(self) -> Ast:
        if self.peek().kind != "[":
            return self.term()
        self.take()
        node = self.expr()
        if self.peek().kind != ",":
            self.fail("expected ',' (a bracket needs at least two entries)")
        while self.peek().kind == ",":
            self.take()
            node = ("br", node, self.expr())
        if self.peek().kind != "]":
            self.fail("expected ',' or ']'")
        self.take()
        return node

    def term(self) -> Ast:
        tok = self.peek()
        if tok.kind == "z":
            self.take()
            return ("z",)
        if tok.kind == "c":
            if tok.value < 1:
                self.fail("generator index must be positive")
            self.take()
            return ("c", tok.value)
        if tok.kind == "int":
            self.take()
            if self.peek().kind != "*":
                self.fail("expected '*' after integer scalar")
            self.take()
            return ("scale", tok.value, self.expr())
        self.fail("expected 'z', 'c<k>', an integer scalar or '['")


def parse(src: str) -> Ast:
    parser = _Parser(_tokenize(src))
    ast = parser.expr()
    if parser.peek().kind != "end":
        parser.fail("unexpected trailing input")
    return ast


def pretty(ast: Ast) -> str:
    kind = ast[0]
    if kind == "z":
        return "z"
    if kind == "c":
        return f"c{ast[1]}"
    if kind == "scale":
        return f"{ast[1]}*{pretty(ast[2])}"
    chain = []
    node = ast
    while node[0] == "br":
        chain.append(node[2])
        node = node[1]
    chain.append(node)
    return "[" + ",".join(pretty(x) for x in reversed(chain)) + "]"


def evaluate(ast: Ast) -> MixedValue:
    kind = ast[0]
    if kind == "z":
        return zelt()
    if kind == "c":
        return CMarker(ast[1])
    if kind == "scale":
        return mixed_scale(ast[1], evaluate(ast[2]))
    return mixed_bracket(evaluate(ast[1]), evaluate(ast[2]))
