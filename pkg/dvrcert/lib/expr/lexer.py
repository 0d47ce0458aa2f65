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

"""Split an element expression into tokens."""

import enum
from dataclasses import dataclass

from dvrcert.lib.exceptions import DCSyntaxError
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _

__all__ = ["Token", "TokenType", "get_token"]


class TokenType(enum.Enum):
    """The type of the token."""

    NUMBER = 0
    T = 1
    SYMBOL = 2  # z3, a0, y1, w2
    PLUS = 3
    MINUS = 4
    STAR = 5
    SLASH = 6
    CARET = 7
    LPAREN = 8
    RPAREN = 9
    END = 10


@dataclass(frozen=True)
class Token:
    """The token of the expression."""

    token_type: TokenType
    value: str
    position: int


_PUNCTUATION = {
    "+": TokenType.PLUS,
    "-": TokenType.MINUS,
    "*": TokenType.STAR,
    "/": TokenType.SLASH,
    "^": TokenType.CARET,
    "(": TokenType.LPAREN,
    ")": TokenType.RPAREN,
}

_SYMBOL_HEADS = frozenset("zayw")


def get_token(expression: str) -> list[Token]:
    """Get the token list of the expression.

    Args:
        expression (str): The expression to split.

    Returns:
        list[Token]: The tokens, ending with an END token.

    Raises:
        DCSyntaxError: On a character that starts no token.

    """
    res: list[Token] = []
    idx = 0
    size = len(expression)
    while idx < size:
        c = expression[idx]
        if c.isspace():
            idx += 1
            continue
        if c in _PUNCTUATION:
            res.append(Token(_PUNCTUATION[c], c, idx))
            idx += 1
            continue
        if c.isdigit():
            start = idx
            while idx < size and expression[idx].isdigit():
                idx += 1
            res.append(Token(TokenType.NUMBER, expression[start:idx], start))
            continue
        if c == "t":
            res.append(Token(TokenType.T, c, idx))
            idx += 1
            continue
        if c in _SYMBOL_HEADS:
            start = idx
            idx += 1
            while idx < size and expression[idx].isdigit():
                idx += 1
            if idx == start + 1:
                raise DCSyntaxError(
                    fast_format_str(
                        _("'${{name}}' needs an index at column ${{pos}}."),
                        fmt={"name": c, "pos": start},
                    ),
                    position=start,
                )
            res.append(Token(TokenType.SYMBOL, expression[start:idx], start))
            continue
        raise DCSyntaxError(
            fast_format_str(
                _("Unexpected character '${{char}}' at column ${{pos}}."),
                fmt={"char": c, "pos": idx},
            ),
            position=idx,
        )
    res.append(Token(TokenType.END, "", size))
    return res
