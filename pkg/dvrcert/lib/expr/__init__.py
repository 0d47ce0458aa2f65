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

"""Expressions for elements of A, B and C."""

from beartype import beartype

from dvrcert.algebra.base_ring import AElem, BaseRing
from dvrcert.algebra.construction import ConstructionParams
from dvrcert.algebra.ring_b import BElem
from dvrcert.lib.expr.execute import evaluate_a, evaluate_b
from dvrcert.lib.expr.expr_ast import parse_text

__all__ = ["parse_a", "parse_expression"]


@beartype
def parse_expression(text: str, params: ConstructionParams) -> BElem:
    """Parse an element of B.

    y_i stands for (z_i - a_i)^2 and w_i for t^{n_i+1} (z_i - a_i).

    Args:
        text (str): Expression such as "t*(z0 - a0)" or "y1^2 + 3".
        params (ConstructionParams): Construction data.

    Returns:
        BElem: The exact value.

    Raises:
        DCSyntaxError: On malformed input, with its column.
        DCUnknownIndexError: If an index exceeds r_max+1.

    """
    return evaluate_b(parse_text(text), params)


@beartype
def parse_a(text: str, base: BaseRing) -> AElem:
    """Parse an element of A written in t.

    Args:
        text (str): Expression such as "1 + t^2".
        base (BaseRing): The base ring.

    Returns:
        AElem: The exact value.

    """
    return evaluate_a(parse_text(text), base)
