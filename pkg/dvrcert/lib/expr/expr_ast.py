# -*- mode: python -*-
# vi: set ft=python :

# Copyright (C) 2026 The dvrcert Authors.
# This file is part of dvrcert.
#
# dvrcert is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published
# by the Free Software Foundation, either version 3 of the License,
# or (at your option) any later version.
#
# dvrcert is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Element expression AST generator.

Grammar:

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := atom ('^' nat)?
    atom   := 't' | symbol | nat | '(' expr ')'
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from dvrcert.lib.exceptions import DCSyntaxError
from dvrcert.lib.expr.lexer import Token, TokenType, get_token
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _

__all__ = [
    "BinOp",
    "Expression",
    "Neg",
    "Number",
    "Operator",
    "Power",
    "Symbol",
    "SymbolKind",
    "parse_tokens",
    "parse_text",
]


class SymbolKind(enum.Enum):
    """The kind of a named element."""

    T = "t"
    Z = "z"
    A = "a"
    Y = "y"
    W = "w"


class Operator(enum.Enum):
    """Binary operators."""

    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"


@dataclass(frozen=True)
class Number:
    """A natural number literal."""

    value: int
    position: int


@dataclass(frozen=True)
class Symbol:
    """t, or a generator family with its index."""

    kind: SymbolKind
    index: int
    position: int


@dataclass(frozen=True)
class BinOp:
    """A binary operation."""

    op: Operator
    left: Expression
    right: Expression
    position: int


@dataclass(frozen=True)
class Neg:
    """Unary minus."""

    operand: Expression
    position: int


@dataclass(frozen=True)
class Power:
    """A power with a natural exponent."""

    base: Expression
    exponent: int
    position: int


Expression = Number | Symbol | BinOp | Neg | Power


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.idx = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.idx]

    def advance(self) -> Token:
        token = self.tokens[self.idx]
        if token.token_type != TokenType.END:
            self.idx += 1
        return token

    def expect(self, token_type: TokenType, what: str) -> Token:
        token = self.current
        if token.token_type != token_type:
            raise _unexpected(token, what)
        return self.advance()

    def expr(self) -> Expression:
        node = self.term()
        while self.current.token_type in (TokenType.PLUS, TokenType.MINUS):
            token = self.advance()
            plus = token.token_type == TokenType.PLUS
            op = Operator.ADD if plus else Operator.SUB
            node = BinOp(op, node, self.term(), token.position)
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.current.token_type in (TokenType.STAR, TokenType.SLASH):
            token = self.advance()
            star = token.token_type == TokenType.STAR
            op = Operator.MUL if star else Operator.DIV
            node = BinOp(op, node, self.unary(), token.position)
        return node

    def unary(self) -> Expression:
        if self.current.token_type == TokenType.MINUS:
            token = self.advance()
            return Neg(self.unary(), token.position)
        return self.factor()

    def factor(self) -> Expression:
        node = self.atom()
        if self.current.token_type == TokenType.CARET:
            caret = self.advance()
            exponent = self.expect(TokenType.NUMBER, _("an exponent"))
            return Power(node, int(exponent.value), caret.position)
        return node

    def atom(self) -> Expression:
        token = self.current
        if token.token_type == TokenType.NUMBER:
            self.advance()
            return Number(int(token.value), token.position)
        if token.token_type == TokenType.T:
            self.advance()
            return Symbol(SymbolKind.T, 0, token.position)
        if token.token_type == TokenType.SYMBOL:
            self.advance()
            return Symbol(
                SymbolKind(token.value[0]),
                int(token.value[1:]),
                token.position,
            )
        if token.token_type == TokenType.LPAREN:
            self.advance()
            node = self.expr()
            self.expect(TokenType.RPAREN, "')'")
            return node
        raise _unexpected(token, _("an operand"))


def _unexpected(token: Token, what: str) -> DCSyntaxError:
    at_end = token.token_type == TokenType.END
    found = _("end of input") if at_end else token.value
    return DCSyntaxError(
        fast_format_str(
            _("Expected ${{what}} at column ${{pos}}, found '${{found}}'."),
            fmt={"what": what, "pos": token.position, "found": found},
        ),
        position=token.position,
    )


def parse_tokens(tokens: list[Token]) -> Expression:
    """Parse the token list to AST.

    Args:
        tokens (list[Token]): The token list, ending with END.

    Returns:
        Expression: The root node.

    Raises:
        DCSyntaxError: If the tokens do not form an expression.

    """
    parser = _Parser(tokens)
    node = parser.expr()
    if parser.current.token_type != TokenType.END:
        raise _unexpected(parser.current, _("an operator"))
    return node


def parse_text(text: str) -> Expression:
    """Tokenize and parse an expression.

    Args:
        text (str): The expression.

    Returns:
        Expression: The root node.

    """
    return parse_tokens(get_token(text))
