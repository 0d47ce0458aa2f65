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

"""Seeded random elements of B and C for the property checks."""

from __future__ import annotations

import random
from typing import TYPE_CHECKING

from dvrcert.algebra.ring_b import BElem
from dvrcert.algebra.ring_c import CElem

if TYPE_CHECKING:
    from dvrcert.algebra.base_ring import AElem
    from dvrcert.algebra.construction import ConstructionParams

__all__ = [
    "make_rng",
    "random_belem",
    "random_candidate",
    "random_celem",
]


def make_rng(seed: int, index: int = 0) -> random.Random:
    """Get the generator of trial `index` under `seed`.

    Args:
        seed (int): Run seed.
        index (int): Trial index.

    Returns:
        random.Random: An independent, reproducible generator.

    """
    return random.Random(seed * 1_000_003 + index)  # noqa: S311


def _coefficient(
    params: ConstructionParams,
    rng: random.Random,
    max_valuation: int,
) -> AElem:
    return params.base.random_element(rng, max_valuation=max_valuation)


def random_belem(  # noqa: PLR0913
    params: ConstructionParams,
    rng: random.Random,
    *,
    level: int = 0,
    degree: int = 4,
    max_valuation: int = 3,
    density: float = 0.6,
) -> BElem:
    """Sample a sparse polynomial in z_level.

    Args:
        params (ConstructionParams): Construction data.
        rng (random.Random): Seeded generator.
        level (int): Level of the sample.
        degree (int): Degree bound in z_level.
        max_valuation (int): Valuation bound of each coefficient.
        density (float): Probability that a coefficient is nonzero.

    Returns:
        BElem: The sample, possibly zero.

    """
    base = params.base
    coeffs = [
        _coefficient(params, rng, max_valuation)
        if rng.random() < density
        else base.zero
        for _k in range(degree + 1)
    ]
    return BElem(params, level, coeffs)


def random_celem(  # noqa: PLR0913
    params: ConstructionParams,
    rng: random.Random,
    *,
    level: int = 0,
    degree: int = 6,
    max_valuation: int = 3,
    density: float = 0.6,
    unit_constant: bool | None = None,
) -> CElem:
    """Sample an element of C through its word coefficients.

    The words y^b and w y^b of u-degree at most `degree` get a nonzero
    coefficient with probability `density`.

    Args:
        params (ConstructionParams): Construction data.
        rng (random.Random): Seeded generator.
        level (int): Level of the sample.
        degree (int): Bound of the u-degree.
        max_valuation (int): Valuation bound of each coefficient.
        density (float): Probability that a word is used.
        unit_constant (bool | None): Force the constant term to be a unit
            (True) or to lie in tA (False). None leaves it random.

    Returns:
        CElem: The sample.

    """
    base = params.base
    c: dict[int, AElem] = {}
    d: dict[int, AElem] = {}
    for k in range(degree + 1):
        if rng.random() >= density:
            continue
        value = _coefficient(params, rng, max_valuation)
        if k % 2 == 0:
            c[k // 2] = value
        else:
            d[k // 2] = value
    if unit_constant is True:
        c[0] = base.random_element(rng, unit=True)
    elif unit_constant is False:
        c[0] = base.shift(
            base.random_element(rng, max_valuation=max_valuation),
            1,
        )
    return CElem(params, level, c, d)


def random_candidate(  # noqa: PLR0913
    params: ConstructionParams,
    r: int,
    rng: random.Random,
    *,
    level: int = 0,
    degree: int = 6,
    adversarial: bool = False,
) -> tuple[CElem, ...]:
    """Sample coefficients f_0..f_r of a would-be finiteness relation.

    f_r gets a unit constant term, so it lies outside M, unless
    `adversarial` asks for f_r in M.

    Args:
        params (ConstructionParams): Construction data.
        r (int): Length of the relation.
        rng (random.Random): Seeded generator.
        level (int): Level of the samples.
        degree (int): Bound of the u-degree.
        adversarial (bool): Put f_r into M.

    Returns:
        tuple[CElem, ...]: f_0, ..., f_r.

    """
    others = [
        random_celem(params, rng, level=level, degree=degree)
        for _i in range(r)
    ]
    last = random_celem(
        params,
        rng,
        level=level,
        degree=degree,
        unit_constant=not adversarial,
    )
    return (*others, last)
