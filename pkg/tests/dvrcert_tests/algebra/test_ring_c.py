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

"""Test dvrcert.algebra.ring_c module."""

import pytest

from dvrcert.algebra.construction import ConstructionParams
from dvrcert.algebra.ring_b import BElem
from dvrcert.algebra.ring_c import (
    CElem,
    LevelFailure,
    Member,
    NotMember,
    c_add,
    c_membership,
    coerce_c_to,
    coerce_c_up,
    eval_c,
    from_b,
    in_M,
    to_b,
)
from dvrcert.lib.exceptions import DCLevelOutOfRangeError, DCValueError


class TestCoercion:
    """Test the level change of the normal form."""

    def test_y_up(self, params: ConstructionParams) -> None:
        """Test y_0 = t^4 y_1 + 2t w_1 + t^4 for a_i = 1."""
        t = params.base.t
        lifted = coerce_c_up(CElem.y(params, 0))
        if lifted.c != {0: t**4, 1: t**4} or lifted.d != {0: 2 * t}:
            pytest.fail(f"Wrong coercion: {lifted!r}.")

    def test_w_up(self, params: ConstructionParams) -> None:
        """Test w_0 = w_1 + t^3."""
        t = params.base.t
        lifted = coerce_c_up(CElem.w(params, 0))
        if lifted.c != {0: t**3} or lifted.d != {0: params.base.one}:
            pytest.fail(f"Wrong coercion: {lifted!r}.")

    def test_coercion_agrees_with_b(
        self,
        any_params: ConstructionParams,
    ) -> None:
        """Test that coercion in C matches coercion in B."""
        f = CElem.y(any_params, 0) * CElem.w(any_params, 0) + 5
        lifted = coerce_c_to(f, 3)
        if lifted.level != 3:  # noqa: PLR2004
            pytest.fail("Wrong level.")
        if to_b(lifted) != to_b(f):
            pytest.fail("The two normal forms describe different elements.")

    def test_limits(self, params: ConstructionParams) -> None:
        """Test that coercion stays within 0..r_max+1."""
        pytest.raises(
            DCLevelOutOfRangeError,
            coerce_c_up,
            CElem.y(params, params.top_level),
        )
        y2 = CElem.y(params, 2)
        pytest.raises(DCLevelOutOfRangeError, coerce_c_to, y2, 1)


class TestArithmetic:
    """Test the ring operations of C."""

    def test_w_square(self, params: ConstructionParams) -> None:
        """Test w_s^2 = t^{2n_s+2} y_s."""
        for s in range(3):
            w = CElem.w(params, s)
            if w * w != CElem.y(params, s).shift(2 * params.n[s] + 2):
                pytest.fail(f"w_{s}^2 is wrong.")

    def test_c_add(self, any_params: ConstructionParams) -> None:
        """Test that to_b is additive across levels."""
        f = CElem.y(any_params, 0)
        g = CElem.w(any_params, 1)
        total = c_add(f, g)
        if total.level != 1 or total != f + g:
            pytest.fail(f"Wrong sum at level {total.level}.")
        if to_b(total) != to_b(f) + to_b(g):
            pytest.fail("to_b(f+g) != to_b(f)+to_b(g).")

    def test_multiplication_matches_b(
        self,
        any_params: ConstructionParams,
    ) -> None:
        """Test that to_b is multiplicative."""
        f = CElem.y(any_params, 0) + CElem.w(any_params, 1)
        g = CElem.w(any_params, 0) * 3 - 1
        if to_b(f * g) != to_b(f) * to_b(g):
            pytest.fail("to_b(f*g) != to_b(f)*to_b(g).")

    def test_to_b(self, params: ConstructionParams) -> None:
        """Test w_0 = t(z_0 - a_0)."""
        expected = BElem.shifted_generator(params, 0).shift(1)
        if to_b(CElem.w(params, 0)) != expected:
            pytest.fail("Wrong expansion of w_0.")

    def test_equality(self, params: ConstructionParams) -> None:
        """Test comparison across levels and with constants."""
        y0 = CElem.y(params, 0)
        if y0 != coerce_c_up(y0):
            pytest.fail("Coercion should not change the element.")
        if CElem.constant(params, 7, 2) != 7:  # noqa: PLR2004
            pytest.fail("A constant should equal its value.")
        if y0 == CElem.w(params, 0):
            pytest.fail("y_0 and w_0 should differ.")

    def test_eval(self, params: ConstructionParams) -> None:
        """Test evaluation at t = 0."""
        if eval_c(CElem.y(params, 0) + 3) != 3:  # noqa: PLR2004
            pytest.fail("eval_c(y_0 + 3) should be 3.")
        if not in_M(CElem.w(params, 0)) or in_M(CElem.constant(params, 1)):
            pytest.fail("Wrong membership in M.")


class TestMembership:
    """Test membership of elements of B in C."""

    def test_round_trip(self, any_params: ConstructionParams) -> None:
        """Test that from_b inverts to_b."""
        w = CElem.w(any_params, 1).scale(any_params.a[0])
        f = CElem.y(any_params, 1) ** 2 + w
        if from_b(to_b(f)) != f:
            pytest.fail("from_b(to_b(f)) != f.")

    def test_not_at_level(self, params: ConstructionParams) -> None:
        """Test that z_0 is not in C."""
        pytest.raises(DCValueError, from_b, BElem.generator(params, 0))

    def test_member(self, params: ConstructionParams) -> None:
        """Test t(z_0 - a_0) at level 0."""
        result = c_membership(BElem.shifted_generator(params, 0).shift(1), 3)
        if not isinstance(result, Member) or result.level != 0:
            pytest.fail(f"Expected membership at level 0, got {result}.")
        if result.elem != CElem.w(params, 0):
            pytest.fail("Wrong normal form.")

    def test_not_member(self, params: ConstructionParams) -> None:
        """Test that z_0 - a_0 fails at every level."""
        result = c_membership(BElem.shifted_generator(params, 0), 3)
        if not isinstance(result, NotMember):
            pytest.fail(f"Expected non-membership, got {result}.")
        if result.levels != (0, 1, 2, 3):
            pytest.fail(f"Wrong levels: {result.levels}.")
        expected = (
            LevelFailure(0, 1, 0, 1),
            LevelFailure(1, 1, 2, 3),
            LevelFailure(2, 1, 6, 7),
            LevelFailure(3, 1, 14, 15),
        )
        if result.failures != expected:
            pytest.fail(f"Wrong failures: {result.failures}.")
