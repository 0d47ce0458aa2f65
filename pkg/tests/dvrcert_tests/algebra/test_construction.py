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

"""Test dvrcert.algebra.construction module."""

import pytest

from dvrcert.algebra.base_ring import BaseRingConfig, ResidueFieldKind
from dvrcert.algebra.construction import (
    ConstructionParams,
    build_params,
    check_defining_identities,
    minimal_exponents,
    ones_coefficients,
    random_unit_coefficients,
    trick1_difference,
    validate,
    z_series,
)
from dvrcert.algebra.series import from_aelem
from dvrcert.lib.exceptions import DCConfigError, DCIndexOutOfRangeError


class TestExponents:
    """Test exponent validation."""

    base = BaseRingConfig().build()

    def test_minimal(self) -> None:
        """Test n_r = 2(2^r - 1)."""
        if minimal_exponents(3) != [0, 2, 6, 14, 30]:
            pytest.fail(f"Wrong exponents: {minimal_exponents(3)}.")

    def test_minimal_is_valid(self) -> None:
        """Test that the minimal exponents pass validation."""
        for r_max in range(6):
            params = ConstructionParams(
                self.base,
                tuple(ones_coefficients(self.base, r_max)),
                tuple(minimal_exponents(r_max)),
                r_max,
            )
            if validate(params):
                pytest.fail(f"Minimal exponents rejected at r_max={r_max}.")

    def test_growth_violation(self) -> None:
        """Test that n_2 = 5 < 2*2 + 2 is rejected."""
        with pytest.raises(DCConfigError):
            a = ones_coefficients(self.base, 1)
            build_params(self.base, a, [0, 2, 5], 1)

    def test_rules(self) -> None:
        """Test which rules are reported."""
        params = ConstructionParams(
            self.base,
            (self.base.one, self.base.t, self.base.one),
            (1, 4, 10),
            1,
        )
        rules = {(v.index, v.rule) for v in validate(params)}
        if (1, "unit") not in rules or (0, "n0") not in rules:
            pytest.fail(f"Missing violations: {rules}.")

    def test_length(self) -> None:
        """Test that a short list is reported once."""
        params = ConstructionParams(
            self.base,
            (self.base.one,),
            (0,),
            2,
        )
        violations = validate(params)
        if len(violations) != 1 or violations[0].rule != "length":
            pytest.fail(f"Wrong violations: {violations}.")


class TestConstructionParams:
    """Test the construction data."""

    def test_m(self, params: ConstructionParams) -> None:
        """Test m_r = n_r - n_{r-1}."""
        if [params.m(r) for r in range(1, 4)] != [2, 4, 8]:
            pytest.fail("Wrong gaps.")
        pytest.raises(DCIndexOutOfRangeError, params.m, 0)
        pytest.raises(DCIndexOutOfRangeError, params.m, params.top_level + 1)

    def test_prefix_sum(self, params: ConstructionParams) -> None:
        """Test Σ_{i<2} a_i t^{n_i} = 1 + t^2."""
        t = params.base.t
        if params.prefix_sum(2) != 1 + t**2:
            pytest.fail(f"Wrong prefix sum: {params.prefix_sum(2)}.")

    def test_transition(self, params: ConstructionParams) -> None:
        """Test z_1 = 1 + t^4 + t^12 z_3."""
        t = params.base.t
        c0, c1 = params.transition(1, 3)
        if c0 != 1 + t**4 or c1 != t**12:
            pytest.fail(f"Wrong transition: {c0}, {c1}.")
        if params.transition(1, 3)[0] is not c0:
            pytest.fail("Transitions should be cached.")
        if params.transition(2, 2) != (0, 1):
            pytest.fail("A level maps to itself.")
        pytest.raises(DCIndexOutOfRangeError, params.transition, 3, 1)

    def test_trick1_difference(self, params: ConstructionParams) -> None:
        """Test Σ_{j=1}^{2} a_j t^{n_j+1} = t^3 + t^7."""
        t = params.base.t
        if trick1_difference(params, 2) != t**3 + t**7:
            pytest.fail("Wrong difference.")

    def test_z_series(self, params: ConstructionParams) -> None:
        """Test z_1 = 1 + t^4 + t^12 + ..."""
        t = params.base.t
        if z_series(params, 1, 10) != from_aelem(1 + t**4, 10):
            pytest.fail(f"Wrong z_1: {z_series(params, 1, 10)}.")

    def test_random_units_are_reproducible(self) -> None:
        """Test that the same seed gives the same units."""
        base = BaseRingConfig(field=ResidueFieldKind.PRIME_FIELD, q=101).build()
        first = random_unit_coefficients(base, 3, 11)
        if first != random_unit_coefficients(base, 3, 11):
            pytest.fail("Seeded units differ.")
        if any(not a.is_unit() for a in first):
            pytest.fail("Sampled a non-unit.")


class TestDefiningIdentities:
    """Test the series oracle for the defining identities."""

    def test_identities_hold(self, any_params: ConstructionParams) -> None:
        """Test that every residual vanishes."""
        residuals = check_defining_identities(
            any_params.series,
            any_params.r_max,
            40,
        )
        if len(residuals) != 2 * (any_params.r_max + 1):
            pytest.fail("Expected two residuals per index.")
        failing = [res for res in residuals if not res.vanishes]
        if failing:
            pytest.fail(f"Identities fail: {failing}.")

    def test_corruption_is_detected(self, params: ConstructionParams) -> None:
        """Test that a corrupted z_0 breaks the first identity."""
        table = params.series.corrupt(0, 3)
        if not table.is_corrupted or params.series.is_corrupted:
            pytest.fail("Corruption should only affect the new table.")
        residuals = check_defining_identities(table, params.r_max, 40)
        first = residuals[0]
        if first.identity != "z_r-a_r" or first.valuation != 3:  # noqa: PLR2004
            pytest.fail(f"Wrong residual: {first}.")
