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

"""Evaluate element expressions exactly."""

from __future__ import annotations

from typing import TYPE_CHECKING

from dvrcert.algebra.base_ring import AElem, invert_unit, valuation
from dvrcert.algebra.ring_b import BElem
from dvrcert.algebra.ring_c import CElem, to_b
from dvrcert.lib.exceptions import DCSyntaxError, DCUnknownIndexError
from dvrcert.lib.expr.expr_ast import (
    BinOp,
    Expression,
    Neg,
    Number,
    Operator,
    Power,
    Symbol,
    SymbolKind,
)
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _

if TYPE_CHECKING:
    from dvrcert.algebra.base_ring import BaseRing
    from dvrcert.algebra.construction import ConstructionParams

__all__ = ["evaluate_a", "evaluate_b"]


def _check_symbol_index(node: Symbol, top: int) -> None:
    if node.index > top:
        raise DCUnknownIndexError(
            fast_format_str(
                _(
                    "'${{name}}${{index}}' at column ${{pos}} is above the "
                    "highest index ${{top}}.",
                ),
                fmt={
                    "name": node.kind.value,
                    "index": node.index,
                    "pos": node.position,
                    "top": top,
                },
            ),
            hint=_("Increase r_max in the configuration."),
        )


def _symbol_b(node: Symbol, params: ConstructionParams) -> BElem:
    if node.kind == SymbolKind.T:
        return BElem.constant(params, params.base.t)
    _check_symbol_index(node, params.top_level)
    i = node.index
    match node.kind:
        case SymbolKind.Z:
            return BElem.generator(params, i)
        case SymbolKind.A:
            return BElem.constant(params, params.a[i])
        case SymbolKind.Y:
            return to_b(CElem.y(params, i))
        case _:
            return to_b(CElem.w(params, i))


def _divisor(node: BinOp, value: AElem) -> AElem:
    if value.is_zero or valuation(value) != 0:
        raise DCSyntaxError(
            fast_format_str(
                _(
                    "Division at column ${{pos}} needs a unit of A, got "
                    "${{value}}.",
                ),
                fmt={"pos": node.position, "value": str(value)},
            ),
            position=node.position,
        )
    return invert_unit(value)


def evaluate_b(node: Expression, params: ConstructionParams) -> BElem:
    """Evaluate an expression as an element of B.

    Args:
        node (Expression): The AST.
        params (ConstructionParams): Construction data.

    Returns:
        BElem: The value.

    Raises:
        DCUnknownIndexError: If a generator index exceeds r_max+1.
        DCSyntaxError: If a divisor is not a unit of A.

    """
    match node:
        case Number(value=value):
            return BElem.constant(params, value)
        case Symbol():
            return _symbol_b(node, params)
        case Neg(operand=operand):
            return -evaluate_b(operand, params)
        case Power(base=base, exponent=exponent):
            return evaluate_b(base, params) ** exponent
        case BinOp(op=Operator.DIV, left=left, right=right):
            divisor = evaluate_b(right, params)
            if divisor.degree > 0:
                raise DCSyntaxError(
                    fast_format_str(
                        _("Division at column ${{pos}} needs an element of A."),
                        fmt={"pos": node.position},
                    ),
                    position=node.position,
                )
            constant = divisor.coeffs[0] if divisor.coeffs else params.base.zero
            return evaluate_b(left, params).scale(_divisor(node, constant))
        case BinOp(op=op, left=left, right=right):
            lhs = evaluate_b(left, params)
            rhs = evaluate_b(right, params)
            if op == Operator.ADD:
                return lhs + rhs
            if op == Operator.SUB:
                return lhs - rhs
            return lhs * rhs
    msg = f"Unknown node: {node!r}"
    raise TypeError(msg)


def evaluate_a(node: Expression, base: BaseRing) -> AElem:
    """Evaluate an expression in t alone as an element of A.

    Args:
        node (Expression): The AST.
        base (BaseRing): The base ring.

    Returns:
        AElem: The value.

    Raises:
        DCSyntaxError: If the expression names a generator or divides by a
            non-unit.

    """
    match node:
        case Number(value=value):
            return base(value)
        case Symbol(kind=SymbolKind.T):
            return base.t
        case Symbol(position=position):
            raise DCSyntaxError(
                fast_format_str(
                    _("Only t may appear here (column ${{pos}})."),
                    fmt={"pos": position},
                ),
                position=position,
            )
        case Neg(operand=operand):
            return -evaluate_a(operand, base)
        case Power(base=inner, exponent=exponent):
            return evaluate_a(inner, base) ** exponent
        case BinOp(op=op, left=left, right=right):
            lhs = evaluate_a(left, base)
            rhs = evaluate_a(right, base)
            if op == Operator.DIV:
                return lhs * _divisor(node, rhs)
            if op == Operator.ADD:
                return lhs + rhs
            if op == Operator.SUB:
                return lhs - rhs
            return lhs * rhs
    msg = f"Unknown node: {node!r}"
    raise TypeError(msg)
