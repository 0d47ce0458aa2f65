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

"""Test dvrcert.algebra.base_ring module."""

import random
from fractions import Fraction

import pytest

from dvrcert.algebra.base_ring import (
    BaseRingConfig,
    BaseRingMode,
    ResidueFieldKind,
    invert_unit,
    residue,
    unit_part_split,
    valuation,
)
from dvrcert.algebra.series import from_aelem
from dvrcert.lib.exceptions import (
    DCConfigError,
    DCNotAUnitError,
    DCValueError,
    DCZeroInputError,
)


class TestPolyBaseRing:
    """Test A = Q[t] localized at (t)."""

    base = BaseRingConfig().build()

    def test_valuation(self) -> None:
        """Test valuations of polynomials and fractions."""
        t = self.base.t
        if valuation(t**3 * (1 + t)) != 3:  # noqa: PLR2004
            pytest.fail("v(t^3 (1+t)) should be 3.")
        if valuation(self.base.zero) != float("inf"):
            pytest.fail("v(0) should be infinite.")
        quotient = t**2 * invert_unit(1 - t)
        if valuation(quotient) != 2:  # noqa: PLR2004
            pytest.fail("v(t^2 / (1-t)) should be 2.")

    def test_unit_part_split(self) -> None:
        """Test t^n * u splitting."""
        t = self.base.t
        n, u = unit_part_split(t**4 * (3 + t))
        if n != 4 or u != 3 + t:  # noqa: PLR2004
            pytest.fail(f"Wrong split: {n}, {u}.")
        pytest.raises(DCZeroInputError, unit_part_split, self.base.zero)

    def test_invert_unit(self) -> None:
        """Test exact inverses of units."""
        t = self.base.t
        u = 1 - t
        if u * invert_unit(u) != 1:
            pytest.fail("u * u^-1 should be 1.")
        pytest.raises(DCNotAUnitError, invert_unit, t)

    def test_fraction_arithmetic(self) -> None:
        """Test that mixed denominators give the canonical form."""
        t = self.base.t
        u = invert_unit(1 - t)
        product = (t + u) * (1 - t)
        if product != 1 + t - t**2 or product.den != self.base.poly_ring.one:
            pytest.fail(f"(t + 1/(1-t)) (1-t) should be 1 + t - t^2: {product}")
        if (u + u) * (1 - t) != 2 or not (u - u).is_zero:  # noqa: PLR2004
            pytest.fail("Equal denominators should cancel.")
        if valuation(t**3 * u) != 3 or t**3 * u * (1 - t) != t**3:  # noqa: PLR2004
            pytest.fail("t^3 / (1-t) is wrong.")

    def test_hash_matches_numbers(self) -> None:
        """Test that constants hash like the numbers they equal."""
        half = Fraction(1, 2)
        if hash(self.base(3)) != hash(3) or hash(self.base(half)) != hash(half):
            pytest.fail("Constants should hash like Python numbers.")
        if len({self.base(3), 3, self.base.t}) != 2:  # noqa: PLR2004
            pytest.fail("3 and A(3) should be one set member.")

    def test_residue(self) -> None:
        """Test reduction modulo t."""
        t = self.base.t
        if residue(5 + t) != self.base.residue_field(5):
            pytest.fail("Residue of 5 + t should be 5.")

    def test_unshift_not_divisible(self) -> None:
        """Test that t / t^2 is rejected."""
        pytest.raises(DCValueError, self.base.unshift, self.base.t, 2)

    def test_random_unit(self) -> None:
        """Test that sampled units are units."""
        rng = random.Random(1)
        for _i in range(20):
            if not self.base.random_element(rng, unit=True).is_unit():
                pytest.fail("random_element(unit=True) returned a non-unit.")


class TestPAdicBaseRing:
    """Test A = Z localized at (5)."""

    base = BaseRingConfig(mode=BaseRingMode.PADIC, p=5).build()

    def test_inverse_of_two(self) -> None:
        """Test 1/2 modulo 25."""
        half = self.base(Fraction(1, 2))
        if from_aelem(half, 2).value != 13:  # noqa: PLR2004
            pytest.fail("1/2 mod 5^2 should be 13.")

    def test_unit_part_split(self) -> None:
        """Test 50 = 5^2 * 2."""
        n, u = unit_part_split(self.base(50))
        if n != 2 or u != 2:  # noqa: PLR2004
            pytest.fail(f"Wrong split of 50: {n}, {u}.")

    def test_t_is_p(self) -> None:
        """Test that the local parameter is p."""
        if self.base.t != 5:  # noqa: PLR2004
            pytest.fail("t should be 5.")

    def test_hash_matches_numbers(self) -> None:
        """Test that elements hash like the rationals they equal."""
        if hash(self.base(Fraction(1, 2))) != hash(Fraction(1, 2)):
            pytest.fail("1/2 should hash like Fraction(1, 2).")
        if len({self.base(2), 2}) != 1:
            pytest.fail("2 and A(2) should be one set member.")

    def test_non_unit_denominator(self) -> None:
        """Test that 1/5 is not in A."""
        pytest.raises(DCValueError, self.base, Fraction(1, 5))


class TestBaseRingConfig:
    """Test the base ring settings."""

    def test_describe(self) -> None:
        """Test descriptions."""
        cases = {
            BaseRingConfig(): "poly/Q",
            BaseRingConfig(
                field=ResidueFieldKind.PRIME_FIELD,
                q=101,
            ): "poly/F_101",
            BaseRingConfig(mode=BaseRingMode.PADIC, p=5): "padic/5",
        }
        for config, expected in cases.items():
            if config.describe() != expected:
                pytest.fail(f"Expected {expected}, got {config.describe()}.")

    def test_not_prime(self) -> None:
        """Test that a composite modulus is rejected."""
        config = BaseRingConfig(field=ResidueFieldKind.PRIME_FIELD, q=4)
        pytest.raises(DCConfigError, config.build)
        config = BaseRingConfig(mode=BaseRingMode.PADIC, p=6)
        pytest.raises(DCConfigError, config.build)

    def test_characteristic(self) -> None:
        """Test the residue characteristic."""
        base = BaseRingConfig(field=ResidueFieldKind.PRIME_FIELD, q=2).build()
        if base.characteristic != 2:  # noqa: PLR2004
            pytest.fail("F_2 should have characteristic 2.")
        if base(2) != 0:
            pytest.fail("2 should vanish in F_2[t].")
