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

"""Construction data of the rings B and C.

The element z of the completion is z = Σ a_k t^{n_k} with units a_k and
exponents n_k, stored for k = 0..r_max+1. The generators are
z_r = Σ_{k>=r} a_k t^{n_k - n_r}; stored tails beyond r_max+1 are zero.
"""

from __future__ import annotations

import enum
import functools
import random
from dataclasses import dataclass, field

from beartype import beartype

from dvrcert.algebra.base_ring import AElem, BaseRing, valuation
from dvrcert.algebra.series import (
    TruncSeries,
    from_aelem,
    series_from_coefficients,
    ts_sub,
    val_lower_bound,
)
from dvrcert.lib.exceptions import (
    DCConfigError,
    DCIndexOutOfRangeError,
)
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

__all__ = [
    "CoefficientPreset",
    "ConstructionParams",
    "IdentityResidual",
    "Violation",
    "ZSeriesTable",
    "build_params",
    "check_defining_identities",
    "minimal_exponents",
    "ones_coefficients",
    "random_unit_coefficients",
    "trick1_difference",
    "validate",
    "z_series",
]


class CoefficientPreset(enum.Enum):
    """How the units a_i are chosen."""

    ONES = "ones"
    RANDOM_UNITS = "random-units"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Violation:
    """A failed construction hypothesis."""

    index: int
    rule: str
    message: str

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class ConstructionParams:
    """The units a_0..a_{r_max+1} and exponents n_0..n_{r_max+1}.

    Transcendence of z over A is an assumption. It is recorded here and
    never checked.
    """

    base: BaseRing
    a: tuple[AElem, ...]
    n: tuple[int, ...]
    r_max: int
    transcendence_assumed: bool = True
    _prefix_cache: dict[int, AElem] = field(
        default_factory=dict,
        compare=False,
        repr=False,
    )
    _transition_cache: dict[tuple[int, int], tuple[AElem, AElem]] = field(
        default_factory=dict,
        compare=False,
        repr=False,
    )

    @functools.cached_property
    def series(self) -> ZSeriesTable:
        """Shared table of the uncorrupted generator series."""
        return ZSeriesTable(self)

    @property
    def top_level(self) -> int:
        """The highest level r_max+1."""
        return self.r_max + 1

    def m(self, r: int) -> int:
        """Get m_r = n_r - n_{r-1}.

        Args:
            r (int): Index, 1 <= r <= r_max+1.

        Returns:
            int: m_r.

        """
        self.check_index(r, low=1)
        return self.n[r] - self.n[r - 1]

    def check_index(self, r: int, *, low: int = 0) -> None:
        """Ensure `low <= r <= r_max+1`.

        Args:
            r (int): Index.
            low (int): Smallest admissible index.

        Raises:
            DCIndexOutOfRangeError: If the index is outside the stored data.

        """
        if not low <= r <= self.top_level:
            raise DCIndexOutOfRangeError(
                fast_format_str(
                    _("Index ${{r}} is outside ${{low}}..${{top}}."),
                    fmt={"r": r, "low": low, "top": self.top_level},
                ),
                hint=_("Increase r_max in the configuration."),
            )

    def prefix_sum(self, r: int) -> AElem:
        """Get Σ_{i<r} a_i t^{n_i}, so that t^{n_r} z_r = z_0 - prefix_sum(r).

        Args:
            r (int): Index, 0 <= r <= r_max+1.

        Returns:
            AElem: The partial sum.

        """
        self.check_index(r)
        cached = self._prefix_cache.get(r)
        if cached is None:
            cached = self.base.zero
            for i in range(r):
                cached = cached + self.base.shift(self.a[i], self.n[i])
            self._prefix_cache[r] = cached
        return cached

    def transition(self, s: int, target: int) -> tuple[AElem, AElem]:
        """Get (c0, c1) with z_s = c0 + c1 z_target.

        c0 is Σ_{s<=i<target} a_i t^{n_i-n_s} and c1 is t^{n_target-n_s}.

        Args:
            s (int): Source level.
            target (int): Target level, s <= target <= r_max+1.

        Returns:
            tuple[AElem, AElem]: The image of z_s at the target level.

        """
        self.check_index(target, low=s)
        key = (s, target)
        cached = self._transition_cache.get(key)
        if cached is None:
            base = self.base
            c0 = base.zero
            for i in range(s, target):
                c0 = c0 + base.shift(self.a[i], self.n[i] - self.n[s])
            cached = (c0, base.t_power(self.n[target] - self.n[s]))
            self._transition_cache[key] = cached
        return cached


def validate(params: ConstructionParams) -> list[Violation]:
    """Check the construction hypotheses.

    Args:
        params (ConstructionParams): The data.

    Returns:
        list[Violation]: Every violated condition; empty means ok.

    """
    problems: list[Violation] = []
    size = params.r_max + 2
    if len(params.a) != size or len(params.n) != size:
        problems.append(
            Violation(
                -1,
                "length",
                fast_format_str(
                    _(
                        "Expected ${{size}} coefficients and exponents, "
                        "got ${{na}} and ${{nn}}.",
                    ),
                    fmt={
                        "size": size,
                        "na": len(params.a),
                        "nn": len(params.n),
                    },
                ),
            ),
        )
        return problems
    for i, coeff in enumerate(params.a):
        if valuation(coeff) != 0:
            problems.append(
                Violation(
                    i,
                    "unit",
                    fast_format_str(
                        _("a_${{i}} = ${{value}} is not a unit."),
                        fmt={"i": i, "value": str(coeff)},
                    ),
                ),
            )
    if params.n[0] != 0:
        problems.append(
            Violation(
                0,
                "n0",
                fast_format_str(
                    _("n_0 must be 0, got ${{n}}."),
                    fmt={"n": params.n[0]},
                ),
            ),
        )
    for r in range(1, size):
        prev, cur = params.n[r - 1], params.n[r]
        if cur < 2 * prev + 2:
            problems.append(
                Violation(
                    r,
                    "growth",
                    fast_format_str(
                        _(
                            "n_${{r}} = ${{cur}} < 2*n_${{prev_r}} + 2 "
                            "= ${{bound}}.",
                        ),
                        fmt={
                            "r": r,
                            "cur": cur,
                            "prev_r": r - 1,
                            "bound": 2 * prev + 2,
                        },
                    ),
                ),
            )
        m = cur - prev
        if 2 * m < cur + 2:
            problems.append(
                Violation(
                    r,
                    "gap",
                    fast_format_str(
                        _("2*m_${{r}} = ${{lhs}} < n_${{r}} + 2 = ${{rhs}}."),
                        fmt={"r": r, "lhs": 2 * m, "rhs": cur + 2},
                    ),
                ),
            )
    return problems


@beartype
def minimal_exponents(r_max: int) -> list[int]:
    """Get the smallest admissible exponents n_r = 2(2^r - 1).

    Args:
        r_max (int): Highest verified level.

    Returns:
        list[int]: n_0..n_{r_max+1}.

    """
    return [2 * (2**r - 1) for r in range(r_max + 2)]


def ones_coefficients(base: BaseRing, r_max: int) -> list[AElem]:
    """Get a_i = 1 for i = 0..r_max+1.

    Args:
        base (BaseRing): Base ring.
        r_max (int): Highest verified level.

    Returns:
        list[AElem]: The coefficients.

    """
    return [base.one] * (r_max + 2)


def random_unit_coefficients(
    base: BaseRing,
    r_max: int,
    seed: int,
) -> list[AElem]:
    """Sample reproducible units a_0..a_{r_max+1}.

    Args:
        base (BaseRing): Base ring.
        r_max (int): Highest verified level.
        seed (int): Generator seed.

    Returns:
        list[AElem]: The coefficients.

    """
    rng = random.Random(seed)  # noqa: S311
    return [base.random_element(rng, unit=True) for _i in range(r_max + 2)]


def build_params(
    base: BaseRing,
    a: list[AElem],
    n: list[int],
    r_max: int,
) -> ConstructionParams:
    """Build and validate the construction data.

    Args:
        base (BaseRing): Base ring.
        a (list[AElem]): Units.
        n (list[int]): Exponents.
        r_max (int): Highest verified level.

    Returns:
        ConstructionParams: The validated data.

    Raises:
        DCConfigError: If a hypothesis fails.

    """
    params = ConstructionParams(base, tuple(a), tuple(n), r_max)
    problems = validate(params)
    if problems:
        raise DCConfigError(
            "; ".join(str(problem) for problem in problems),
            hint=_('Use exponents = "minimal" for the smallest valid choice.'),
        )
    return params


def z_series(params: ConstructionParams, r: int, precision: int) -> TruncSeries:
    """Get z_r modulo t^N.

    Args:
        params (ConstructionParams): The data.
        r (int): Index, 0 <= r <= r_max+1.
        precision (int): N.

    Returns:
        TruncSeries: Σ_{k>=r} a_k t^{n_k - n_r} truncated.

    """
    params.check_index(r)
    top = params.top_level
    return series_from_coefficients(
        params.base,
        list(params.a[r : top + 1]),
        [params.n[k] - params.n[r] for k in range(r, top + 1)],
        precision,
    )


class ZSeriesTable:
    """Cached generator series, with optional fault injection."""

    params: ConstructionParams

    def __init__(self, params: ConstructionParams) -> None:
        """Initialize the table.

        Args:
            params (ConstructionParams): The data.

        """
        self.params = params
        self._cache: dict[tuple[int, int], TruncSeries] = {}
        self._faults: dict[int, int] = {}

    def __call__(self, r: int, precision: int) -> TruncSeries:
        """Get z_r modulo t^N.

        Args:
            r (int): Index.
            precision (int): N.

        Returns:
            TruncSeries: The series, corrupted if a fault was injected.

        """
        key = (r, precision)
        cached = self._cache.get(key)
        if cached is None:
            cached = z_series(self.params, r, precision)
            index = self._faults.get(r)
            if index is not None and index < precision:
                bump = from_aelem(self.params.base.one, precision).shift(index)
                cached = cached + bump
            self._cache[key] = cached
        return cached

    def corrupt(self, r: int, index: int) -> ZSeriesTable:
        """Get a table whose z_r has coefficient `index` changed.

        Args:
            r (int): Series to corrupt.
            index (int): Coefficient position.

        Returns:
            ZSeriesTable: The faulty table. `self` is unchanged.

        """
        self.params.check_index(r)
        logger.debug("Corrupting coefficient %d of z_%d.", index, r)
        table = ZSeriesTable(self.params)
        table._faults = {**self._faults, r: index}  # noqa: SLF001
        return table

    @property
    def is_corrupted(self) -> bool:
        """Whether a fault was injected."""
        return bool(self._faults)


@dataclass(frozen=True)
class IdentityResidual:
    """Residual of one defining identity at one index."""

    r: int
    identity: str
    valuation: int | None

    @property
    def vanishes(self) -> bool:
        """Whether the residual is zero modulo t^N."""
        return self.valuation is None


def check_defining_identities(
    table: ZSeriesTable,
    r_max: int,
    precision: int,
) -> list[IdentityResidual]:
    """Check the two defining identities of every z_r modulo t^N.

    They are z_r - a_r = t^{m_{r+1}} z_{r+1} and
    t^{n_r} z_r = z_0 - Σ_{i<r} a_i t^{n_i}.

    Args:
        table (ZSeriesTable): Series source.
        r_max (int): Highest index to check.
        precision (int): N.

    Returns:
        list[IdentityResidual]: Two residuals per index 0..r_max.

    """
    params = table.params
    residuals: list[IdentityResidual] = []
    z0 = table(0, precision)
    for r in range(r_max + 1):
        zr = table(r, precision)
        step = ts_sub(
            ts_sub(zr, from_aelem(params.a[r], precision)),
            table(r + 1, precision).shift(params.m(r + 1)),
        )
        chain = ts_sub(
            zr.shift(params.n[r]),
            ts_sub(z0, from_aelem(params.prefix_sum(r), precision)),
        )
        for name, residual in (("z_r-a_r", step), ("t^n_r*z_r", chain)):
            bound = val_lower_bound(residual)
            found = bound if isinstance(bound, int) else None
            if found is not None:
                logger.debug(
                    "Identity %s fails at r=%d, valuation %d.",
                    name,
                    r,
                    found,
                )
            residuals.append(IdentityResidual(r, name, found))
    return residuals


def trick1_difference(params: ConstructionParams, r: int) -> AElem:
    """Get t(z_0 - a_0) - t^{n_r+1}(z_r - a_r) as an element of A.

    Args:
        params (ConstructionParams): The data.
        r (int): Index, 0 <= r <= r_max+1.

    Returns:
        AElem: Σ_{j=1}^{r} a_j t^{n_j+1}.

    """
    params.check_index(r)
    total = params.base.zero
    for j in range(1, r + 1):
        total = total + params.base.shift(params.a[j], params.n[j] + 1)
    return total
