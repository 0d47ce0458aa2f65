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

"""Test dvrcert.lib.expr.execute module."""

import pytest

from dvrcert.algebra.base_ring import BaseRingConfig
from dvrcert.algebra.construction import ConstructionParams
from dvrcert.algebra.ring_b import BElem
from dvrcert.algebra.ring_c import CElem, to_b
from dvrcert.lib.exceptions import DCSyntaxError, DCUnknownIndexError
from dvrcert.lib.expr import parse_a, parse_expression


class TestEvaluate:
    """Test exact evaluation of expressions."""

    def test_w0(self, params: ConstructionParams) -> None:
        """Test t*(z0 - a0) = w_0."""
        value = parse_expression("t*(z0 - a0)", params)
        if value != to_b(CElem.w(params, 0)):
            pytest.fail("t*(z0 - a0) should equal w_0.")

    def test_families(self, params: ConstructionParams) -> None:
        """Test that y_i and w_i expand as documented."""
        y1 = parse_expression("y1", params)
        if y1 != parse_expression("(z1 - a1)^2", params):
            pytest.fail("y1 should be (z1 - a1)^2.")
        w2 = parse_expression("w2", params)
        if w2 != BElem.shifted_generator(params, 2).shift(params.n[2] + 1):
            pytest.fail("w2 should be t^7 (z2 - a2).")

    def test_division(self, params: ConstructionParams) -> None:
        """Test division by units of A."""
        t = params.base.t
        value = parse_expression("z0/(1 - t)", params)
        if value * (1 - t) != BElem.generator(params, 0):
            pytest.fail("Division by 1 - t should be exact.")
        pytest.raises(DCSyntaxError, parse_expression, "z0/t", params)
        pytest.raises(DCSyntaxError, parse_expression, "1/z0", params)

    def test_round_trip(self, any_params: ConstructionParams) -> None:
        """Test that a printed element parses back to itself."""
        for text in (
            "(1 + t)*z1^2 - 3*z1 + t/(1 - t)",
            "y0*w1 - 2",
            "(z2 - a2)^3/(2 + t)",
        ):
            value = parse_expression(text, any_params)
            if parse_expression(str(value), any_params) != value:
                pytest.fail(f"{text} printed as {value} does not re-parse.")

    def test_unknown_index(self, params: ConstructionParams) -> None:
        """Test that indices above r_max+1 are rejected."""
        pytest.raises(
            DCUnknownIndexError,
            parse_expression,
            f"z{params.top_level + 1}",
            params,
        )

    def test_parse_a(self) -> None:
        """Test elements of A."""
        base = BaseRingConfig().build()
        t = base.t
        if parse_a("(1 + t)^2 - 2*t", base) != 1 + t**2:
            pytest.fail("Wrong value.")
        if parse_a("t^2/(1 + t)", base) * (1 + t) != t**2:
            pytest.fail("Division should be exact.")
        pytest.raises(DCSyntaxError, parse_a, "z0 + 1", base)
        pytest.raises(DCSyntaxError, parse_a, "1/t", base)
