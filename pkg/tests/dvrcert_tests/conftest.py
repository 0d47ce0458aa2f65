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

"""Shared construction instances."""

import pytest

from dvrcert.algebra.base_ring import (
    BaseRingConfig,
    BaseRingMode,
    ResidueFieldKind,
)
from dvrcert.algebra.construction import (
    ConstructionParams,
    build_params,
    minimal_exponents,
    ones_coefficients,
    random_unit_coefficients,
)


def make_params(
    config: BaseRingConfig,
    r_max: int = 5,
    *,
    seed: int | None = None,
) -> ConstructionParams:
    """Build a minimal-exponent instance, a_i = 1 unless a seed is given."""
    base = config.build()
    if seed is None:
        a = ones_coefficients(base, r_max)
    else:
        a = random_unit_coefficients(base, r_max, seed)
    return build_params(base, a, minimal_exponents(r_max), r_max)


@pytest.fixture(scope="session")
def params() -> ConstructionParams:
    """Minimal exponents, a_i = 1, over Q."""
    return make_params(BaseRingConfig())


@pytest.fixture(scope="session")
def params_fp101() -> ConstructionParams:
    """Seeded random units over F_101."""
    return make_params(
        BaseRingConfig(field=ResidueFieldKind.PRIME_FIELD, q=101),
        seed=7,
    )


@pytest.fixture(scope="session")
def params_padic5() -> ConstructionParams:
    """The 5-adic instance."""
    return make_params(BaseRingConfig(mode=BaseRingMode.PADIC, p=5), r_max=4)


@pytest.fixture(scope="session")
def params_f2() -> ConstructionParams:
    """a_i = 1 over F_2."""
    return make_params(
        BaseRingConfig(field=ResidueFieldKind.PRIME_FIELD, q=2),
        r_max=4,
    )


@pytest.fixture(
    scope="session",
    params=["q", "fp101", "padic5"],
)
def any_params(
    request: pytest.FixtureRequest,
    params: ConstructionParams,
    params_fp101: ConstructionParams,
    params_padic5: ConstructionParams,
) -> ConstructionParams:
    """Each of the three main instances."""
    return {
        "q": params,
        "fp101": params_fp101,
        "padic5": params_padic5,
    }[request.param]
