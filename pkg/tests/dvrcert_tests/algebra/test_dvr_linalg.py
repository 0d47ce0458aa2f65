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

"""Test dvrcert.algebra.dvr_linalg module."""

import pytest

from dvrcert.algebra.base_ring import BaseRingConfig, BaseRingMode
from dvrcert.algebra.construction import ConstructionParams
from dvrcert.algebra.dvr_linalg import (
    AMatrix,
    NoSolution,
    NotFoundWithinBounds,
    module_membership,
    solve_linear,
)
from dvrcert.algebra.ring_c import CElem
from dvrcert.algebra.witnesses import Certificate
from dvrcert.lib.exceptions import (
    DCDimensionMismatchError,
    DCLevelOutOfRangeError,
)


class TestSolveLinear:
    """Test linear systems over A."""

    base = BaseRingConfig().build()

    def test_single_row(self) -> None:
        """Test t^2 h_0 + t^3 h_1 = t^4."""
        t = self.base.t
        matrix = AMatrix.from_rows(self.base, [[t**2, t**3]])
        solution = solve_linear(matrix, [t**4])
        if solution != (t**2, 0):
            pytest.fail(f"Wrong solution: {solution}.")

    def test_not_divisible(self) -> None:
        """Test that t^2 h = t has no solution over A."""
        t = self.base.t
        matrix = AMatrix.from_rows(self.base, [[t**2]])
        outcome = solve_linear(matrix, [t])
        if not isinstance(outcome, NoSolution) or outcome.row != 0:
            pytest.fail(f"Expected no solution, got {outcome}.")

    def test_triangular(self) -> None:
        """Test a 2x2 system needing elimination."""
        t = self.base.t
        matrix = AMatrix.from_rows(self.base, [[1, t], [0, t**2]])
        solution = solve_linear(matrix, [1, t**2])
        if solution != (1 - t, 1):
            pytest.fail(f"Wrong solution: {solution}.")

    def test_inconsistent(self) -> None:
        """Test that h = 1, h = 2 is rejected."""
        matrix = AMatrix.from_rows(self.base, [[1], [1]])
        outcome = solve_linear(matrix, [1, 2])
        if not isinstance(outcome, NoSolution) or outcome.row != 1:
            pytest.fail(f"Expected no solution, got {outcome}.")

    def test_padic(self) -> None:
        """Test 25 h = 50 over Z_(5)."""
        base = BaseRingConfig(mode=BaseRingMode.PADIC, p=5).build()
        solution = solve_linear(AMatrix.from_rows(base, [[25]]), [50])
        if solution != (2,):
            pytest.fail(f"Wrong solution: {solution}.")

    def test_dimensions(self) -> None:
        """Test the shape checks."""
        pytest.raises(
            DCDimensionMismatchError,
            AMatrix.from_rows,
            self.base,
            [[1, 0], [1]],
        )
        matrix = AMatrix.from_rows(self.base, [[1, 0]])
        if matrix.shape != (1, 2):
            pytest.fail(f"Wrong shape: {matrix.shape}.")
        pytest.raises(DCDimensionMismatchError, solve_linear, matrix, [1, 1])


class TestModuleMembership:
    """Test bounded membership searches in C."""

    def test_y0_in_tc(self, params: ConstructionParams) -> None:
        """Test y_0 = t * h at level 1."""
        t = CElem.constant(params, params.base.t)
        outcome = module_membership(CElem.y(params, 0), [t], 1, 2)
        if not isinstance(outcome, Certificate) or not outcome.verify():
            pytest.fail(f"Expected a certificate, got {outcome}.")

    def test_w0_not_in_tc(self, params: ConstructionParams) -> None:
        """Test that w_0 = t(z_0 - a_0) has no multiplier at level 0."""
        t = CElem.constant(params, params.base.t)
        outcome = module_membership(CElem.w(params, 0), [t], 0, 4)
        if not isinstance(outcome, NotFoundWithinBounds):
            pytest.fail(f"Expected no certificate, got {outcome}.")
        if outcome.level != 0 or outcome.degree_bound != 4:  # noqa: PLR2004
            pytest.fail(f"Wrong bounds: {outcome}.")

    def test_level_check(self, params: ConstructionParams) -> None:
        """Test that inputs above the level are rejected."""
        pytest.raises(
            DCLevelOutOfRangeError,
            module_membership,
            CElem.y(params, 2),
            [CElem.constant(params, 1)],
            1,
            2,
        )
