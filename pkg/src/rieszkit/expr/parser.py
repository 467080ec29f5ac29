"""
rieszkit.expr.parser - Recursive-descent parser for expression text.

Grammar::

    expr   := sum
    sum    := prod (('+' | '-') prod)*
    prod   := atom ('*' atom)*
    atom   := rational | ident | '-' atom | '(' expr ')'
            | func '(' expr (',' expr)? ')'
    func   := abs | pos | negp | meet | join

A bare rational literal ``c`` followed by ``*`` scales its right operand
(``2*g1`` is ``Scale(2, g1)``); a parenthesized literal multiplies
(``(2)*g1`` is ``Mul``). The literal ``1`` is the unit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..exceptions import ParseError
from .ast import Abs, Add, Expr, Gen, Join, Meet, Mul, NegPart, Pos, Scale, const, neg

__all__ = ("parse_expr", "Token", "tokenize", "FUNCTIONS")

FUNCTIONS: dict[str, tuple[type[Expr], int]] = {
    "abs": (Abs, 1),
    "pos": (Pos, 1),
    "negp": (NegPart, 1),
    "meet": (Meet, 2),
    "join": (Join, 2),
}

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<rational>\d+(?:\s*/\s*\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*(),])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # rational | ident | op | end
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(
                f"Unexpected character {text[pos]!r} at offset {pos}",
                source=text,
                position=pos,
            )
        if match.lastgroup != "ws":
            tokens.append(Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    # token stream
    def peek(self) -> Token:
        return self.tokens[self.index]

    def next(self) -> Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def error(self, message: str, tok: Token) -> ParseError:
        where = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(
            f"{message}: unexpected {where} at offset {tok.pos}",
            source=self.text,
            position=tok.pos,
        )

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.text != text or tok.kind != "op":
            raise self.error(f"Expected {text!r}", tok)
        return tok

    # grammar
    def parse(self) -> Expr:
        e = self.sum()
        tok = self.peek()
        if tok.kind != "end":
            raise self.error("Trailing input", tok)
        return e

    def sum(self) -> Expr:
        e = self.prod()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.next().text
            rhs = self.prod()
            e = Add(e, rhs if op == "+" else neg(rhs))
        return e

    def prod(self) -> Expr:
        e, literal = self.atom()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.next()
            rhs, _ = self.atom()
            e = Scale(literal, rhs) if literal is not None else Mul(e, rhs)
            literal = None
        return e

    def atom(self) -> tuple[Expr, Fraction | None]:
        """Parse an atom; the second item is the value of a bare literal."""
        tok = self.next()
        if tok.kind == "rational":
            value = self.rational(tok)
            return const(value), value
        if tok.kind == "op" and tok.text == "-":
            inner, literal = self.atom()
            if literal is not None:
                return const(-literal), -literal
            return neg(inner), None
        if tok.kind == "op" and tok.text == "(":
            e = self.sum()
            self.expect(")")
            return e, None
        if tok.kind == "ident":
            if self.peek().kind == "op" and self.peek().text == "(":
                return self.call(tok), None
            return Gen(tok.text), None
        raise self.error("Expected an operand", tok)

    def rational(self, tok: Token) -> Fraction:
        num, _, den = tok.text.partition("/")
        if den and int(den) == 0:
            raise ParseError(
                f"Zero denominator at offset {tok.pos}", source=self.text, position=tok.pos
            )
        return Fraction(int(num), int(den) if den else 1)

    def call(self, name: Token) -> Expr:
        if name.text not in FUNCTIONS:
            raise ParseError(
                f"Unknown function {name.text!r} at offset {name.pos}",
                source=self.text,
                position=name.pos,
                function=name.text,
            )
        node, arity = FUNCTIONS[name.text]
        self.expect("(")
        args = [self.sum()]
        while self.peek().kind == "op" and self.peek().text == ",":
            self.next()
            args.append(self.sum())
        if len(args) != arity:
            raise ParseError(
                f"{name.text} takes {arity} argument(s), got {len(args)} at offset {name.pos}",
                source=self.text,
                position=name.pos,
            )
        self.expect(")")
        return node(*args)


def parse_expr(text: str) -> Expr:
    """Parse expression text into a tree; errors carry the offending offset."""
    return _Parser(text).parse()
