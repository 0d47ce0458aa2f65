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

"""Test dvrcert.algebra.ring_b module."""

import pytest

from dvrcert.algebra.construction import ConstructionParams
from dvrcert.algebra.ring_b import (
    BElem,
    UnitSplit,
    b_add,
    b_valuation,
    coerce_up,
    divide_by_t,
    eval_k,
    from_u_coefficients,
    to_series,
    u_coefficients,
    unit_normalize_b,
)
from dvrcert.algebra.series import AtLeast
from dvrcert.lib.exceptions import (
    DCLevelOutOfRangeError,
    DCNotInKernelError,
    DCValueError,
    DCZeroInputError,
)


class TestBElem:
    """Test arithmetic in B."""

    def test_coerce_up(self, params: ConstructionParams) -> None:
        """Test z_0 = a_0 + t^{m_1} z_1."""
        t = params.base.t
        lifted = coerce_up(BElem.generator(params, 0), 1)
        if lifted.level != 1 or lifted.coeffs != (params.base.one, t**2):
            pytest.fail(f"Wrong coercion: {lifted!r}.")
        pytest.raises(
            DCLevelOutOfRangeError,
            coerce_up,
            BElem.generator(params, 2),
            1,
        )

    def test_coerce_up_levels(self, any_params: ConstructionParams) -> None:
        """Test that a jump of two levels matches two single steps."""
        f = BElem.generator(any_params, 0) ** 3 - 2
        jumped = coerce_up(f, 2)
        stepped = coerce_up(coerce_up(f, 1), 2)
        if jumped.level != 2 or jumped.coeffs != stepped.coeffs:  # noqa: PLR2004
            pytest.fail(f"{jumped!r} != {stepped!r}.")

    def test_cross_level_equality(self, params: ConstructionParams) -> None:
        """Test that equality coerces to the common level."""
        z0 = BElem.generator(params, 0)
        z1 = BElem.generator(params, 1)
        if z0 != 1 + z1.shift(2):
            pytest.fail("z_0 should equal 1 + t^2 z_1.")
        if z0 == z1:
            pytest.fail("z_0 and z_1 should differ.")

    def test_b_add(self, params: ConstructionParams) -> None:
        """Test that b_add lifts to the common level."""
        z0 = BElem.generator(params, 0)
        z1 = BElem.generator(params, 1)
        total = b_add(z0, -z1.shift(2))
        if total.level != 1 or total != 1:
            pytest.fail(f"z_0 - t^2 z_1 should be 1 at level 1, got {total}.")
        if b_add(z0, z1) != z0 + z1:
            pytest.fail("b_add disagrees with +.")

    def test_level_range(self, params: ConstructionParams) -> None:
        """Test that levels beyond r_max+1 are rejected."""
        pytest.raises(
            DCLevelOutOfRangeError,
            BElem,
            params,
            params.top_level + 1,
            [params.base.one],
        )

    def test_negative_power(self, params: ConstructionParams) -> None:
        """Test that z_0^-1 is not in B."""
        with pytest.raises(DCValueError):
            _ = BElem.generator(params, 0) ** -1

    def test_eval_k(self, params: ConstructionParams) -> None:
        """Test t -> 0, z_r -> a_r."""
        f = BElem.generator(params, 0) ** 2 + 3
        if eval_k(f) != 4:  # noqa: PLR2004
            pytest.fail(f"eval_k should give 4, got {eval_k(f)}.")

    def test_u_coefficients(self, params: ConstructionParams) -> None:
        """Test z_0^2 = 1 + 2u + u^2 with u = z_0 - 1."""
        f = BElem.generator(params, 0) ** 2
        if u_coefficients(f) != [1, 2, 1]:
            pytest.fail(f"Wrong u-coefficients: {u_coefficients(f)}.")
        if from_u_coefficients(params, 0, u_coefficients(f)) != f:
            pytest.fail("Expansion in u should be invertible.")

    def test_series_homomorphism(self, any_params: ConstructionParams) -> None:
        """Test that substitution of series respects products."""
        f = BElem.generator(any_params, 0) * 2 + BElem.generator(any_params, 1)
        g = BElem.shifted_generator(any_params, 2) ** 2
        lhs = to_series(f * g, 30)
        rhs = to_series(f, 30) * to_series(g, 30)
        if lhs != rhs:
            pytest.fail(f"{lhs} != {rhs}.")


class TestDivision:
    """Test division by t and unit splitting."""

    def test_valuation(self, params: ConstructionParams) -> None:
        """Test v(t^3 (z_1 - a_1)) = 3 + m_2."""
        f = BElem.shifted_generator(params, 1).shift(3)
        if b_valuation(f, 64) != 7:  # noqa: PLR2004
            pytest.fail(f"Wrong valuation: {b_valuation(f, 64)}.")
        if b_valuation(f, 5) != AtLeast(5):
            pytest.fail("The cap should bound the valuation.")

    def test_divide_by_t(self, params: ConstructionParams) -> None:
        """Test (z_0 - a_0)/t = t z_1."""
        quotient = divide_by_t(BElem.shifted_generator(params, 0))
        if quotient != BElem.generator(params, 1).shift(1):
            pytest.fail(f"Wrong quotient: {quotient}.")

    def test_not_in_kernel(self, params: ConstructionParams) -> None:
        """Test that z_0 is not divisible by t."""
        pytest.raises(
            DCNotInKernelError,
            divide_by_t,
            BElem.generator(params, 0),
        )

    def test_top_level(self, params: ConstructionParams) -> None:
        """Test that division needing a level above r_max+1 fails."""
        f = BElem.shifted_generator(params, params.top_level)
        pytest.raises(DCLevelOutOfRangeError, divide_by_t, f)

    def test_unit_normalize(self, params: ConstructionParams) -> None:
        """Test z_0 - a_0 = t^2 z_1."""
        split = unit_normalize_b(BElem.shifted_generator(params, 0), 32)
        if not isinstance(split, UnitSplit):
            pytest.fail("Expected a split.")
        if split.n != 2 or split.unit != BElem.generator(params, 1):  # noqa: PLR2004
            pytest.fail(f"Wrong split: {split}.")

    def test_unit_normalize_cap(self, params: ConstructionParams) -> None:
        """Test that the cap is reported."""
        f = BElem.shifted_generator(params, 0)
        if unit_normalize_b(f, 1) != AtLeast(1):
            pytest.fail("Expected AtLeast(1).")
        pytest.raises(
            DCZeroInputError,
            unit_normalize_b,
            BElem(params, 0, []),
            8,
        )
