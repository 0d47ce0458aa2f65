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

"""Test dvrcert.algebra.witnesses module."""

import pytest

from dvrcert.algebra.construction import ConstructionParams
from dvrcert.algebra.ring_c import NotMember
from dvrcert.algebra.witnesses import (
    ex2_nonmembership,
    frac_witness,
    integral_equation,
    m2_equals_tm,
    nilpotent_witness,
    trick1_holds,
    trick2_identity,
    y_in_tC_certificate,
)
from dvrcert.lib.exceptions import DCIndexOutOfRangeError


class TestCertificates:
    """Test certificates of ideal membership."""

    def test_y_in_tc(self, any_params: ConstructionParams) -> None:
        """Test y_{i-1} in tC for every inner index."""
        for i in range(1, any_params.r_max + 1):
            certificate = y_in_tC_certificate(any_params, i)
            if not certificate.verify():
                pytest.fail(f"Certificate fails: {certificate.describe()}.")

    def test_dropped_term(self, params: ConstructionParams) -> None:
        """Test that a damaged certificate is rejected."""
        certificate = y_in_tC_certificate(params, 2)
        if certificate.drop_term(0).verify():
            pytest.fail("A certificate without its first term should fail.")
        if len(certificate.drop_term(1).terms) != 2:  # noqa: PLR2004
            pytest.fail("drop_term should remove exactly one term.")

    def test_index_range(self, params: ConstructionParams) -> None:
        """Test that only 1..r_max is accepted."""
        pytest.raises(DCIndexOutOfRangeError, y_in_tC_certificate, params, 0)
        pytest.raises(
            DCIndexOutOfRangeError,
            trick2_identity,
            params,
            params.r_max + 1,
        )

    def test_m2_equals_tm(self, any_params: ConstructionParams) -> None:
        """Test both inclusions of M^2 = tM."""
        forward, backward = m2_equals_tm(any_params)
        for certificate in forward + backward:
            if not certificate.verify():
                pytest.fail(f"Certificate fails: {certificate.name}.")
        if forward[2].drop_term(0).verify():
            pytest.fail("w_0^2 is not zero.")

    def test_describe(self, params: ConstructionParams) -> None:
        """Test the rendering of a certificate."""
        _forward, backward = m2_equals_tm(params)
        if backward[0].describe() != "t^2 = (t)*(t)":
            pytest.fail(f"Wrong rendering: {backward[0].describe()}.")


class TestIdentities:
    """Test the exact identities."""

    def test_trick2(self, any_params: ConstructionParams) -> None:
        """Test the square of z_{i-1} - a_{i-1}."""
        for i in range(1, any_params.r_max + 1):
            if not trick2_identity(any_params, i):
                pytest.fail(f"Identity fails at i={i}.")

    def test_trick1(self, any_params: ConstructionParams) -> None:
        """Test the difference of w_0 and w_r."""
        for r in range(any_params.top_level + 1):
            if not trick1_holds(any_params, r):
                pytest.fail(f"Difference is wrong at r={r}.")

    def test_integral_equation(self, any_params: ConstructionParams) -> None:
        """Test that z_i is integral over C."""
        for i in range(any_params.top_level + 1):
            if not integral_equation(any_params, i).verify():
                pytest.fail(f"Equation fails at i={i}.")
        corrupted = integral_equation(any_params, 1, corrupt=True)
        if corrupted.verify() or corrupted.residual() != 1:
            pytest.fail("A corrupted equation should leave residual 1.")

    def test_fraction(self, any_params: ConstructionParams) -> None:
        """Test z_0 = (w_0 + a_0 t)/t."""
        witness = frac_witness(any_params, 32)
        if not witness.series_ok or not witness.exact_ok:
            pytest.fail(f"Fraction check fails: {witness}.")


class TestNonMembership:
    """Test the evidence that some elements are not in C."""

    def test_ex2(self, params: ConstructionParams) -> None:
        """Test t^{n_1}(z_1 - a_1) at levels 1..4."""
        evidence = ex2_nonmembership(params, 1, 4)
        found = [
            (e.level, e.coefficient_valuation, e.required_valuation)
            for e in evidence
        ]
        if found != [(1, 2, 3), (2, 6, 7), (3, 14, 15), (4, 30, 31)]:
            pytest.fail(f"Wrong evidence: {found}.")
        if not all(e.fails for e in evidence):
            pytest.fail("Every level should fail.")

    def test_nilpotent(self, params: ConstructionParams) -> None:
        """Test x_1 = w_1 over Q."""
        witness = nilpotent_witness(params, 1, 3)
        top = 2 * params.n[1] + 2
        if witness.e_star != top:
            pytest.fail(f"e_star should be {top}, got {witness.e_star}.")
        if witness.unshifted_e_star >= top:
            pytest.fail("z_1 t^{n_1+1} should lose divisibility over Q.")
        if not witness.not_in_tc:
            pytest.fail("x_1 should not lie in tC.")
        if not isinstance(witness.quotient_membership, NotMember):
            pytest.fail("x_1/t should not lie in C.")

    def test_nilpotent_char2(self, params_f2: ConstructionParams) -> None:
        """Test that in characteristic 2 the plain generator keeps the bound."""
        witness = nilpotent_witness(params_f2, 1, 3)
        top = 2 * params_f2.n[1] + 2
        if witness.e_star != top or witness.unshifted_e_star != top:
            pytest.fail(
                f"Expected {top} twice, got {witness.e_star} and "
                f"{witness.unshifted_e_star}.",
            )
