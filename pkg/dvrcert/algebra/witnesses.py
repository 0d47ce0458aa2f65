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

"""Explicit certificates for the ideal-theoretic statements about C.

Every certificate is verified by recomputing both sides in B.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING

from dvrcert.algebra.base_ring import valuation
from dvrcert.algebra.construction import ZSeriesTable, trick1_difference
from dvrcert.algebra.ring_b import (
    BElem,
    coerce_up,
    divide_by_t,
    to_series,
    u_coefficients,
)
from dvrcert.algebra.ring_c import (
    CElem,
    LevelFailure,
    Member,
    NotMember,
    c_membership,
    coerce_c_to,
    to_b,
)
from dvrcert.algebra.series import ts_mul
from dvrcert.lib.exceptions import DCIndexOutOfRangeError
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    from dvrcert.algebra.construction import ConstructionParams

__all__ = [
    "Certificate",
    "Ex2Evidence",
    "FracWitness",
    "IntegralEquation",
    "NilpotentWitness",
    "ex2_nonmembership",
    "frac_witness",
    "integral_equation",
    "m2_equals_tm",
    "nilpotent_witness",
    "trick1_holds",
    "trick2_identity",
    "y_in_tC_certificate",
]


@dataclass(frozen=True)
class Certificate:
    """target = Σ multiplier * generator."""

    name: str
    target: CElem
    terms: tuple[tuple[CElem, CElem], ...]

    def combination(self) -> BElem:
        """Get Σ multiplier * generator in B.

        Returns:
            BElem: The combination.

        """
        params = self.target.params
        total = BElem.constant(params, 0)
        for multiplier, generator in self.terms:
            total = total + to_b(multiplier) * to_b(generator)
        return total

    def verify(self) -> bool:
        """Recompute the combination exactly.

        Returns:
            bool: True if it equals the target.

        """
        return self.combination() == to_b(self.target)

    def drop_term(self, index: int) -> Certificate:
        """Get a copy without one term.

        Args:
            index (int): Position of the dropped term.

        Returns:
            Certificate: The damaged certificate.

        """
        terms = self.terms[:index] + self.terms[index + 1 :]
        return replace(self, terms=terms)

    def describe(self) -> str:
        """Render the certificate.

        Returns:
            str: "target = (m1)*(g1) + ...".

        """
        rhs = " + ".join(f"({m})*({g})" for m, g in self.terms) or "0"
        return f"{self.target} = {rhs}"


def _check_inner_index(params: ConstructionParams, i: int) -> None:
    if not 1 <= i <= params.r_max:
        raise DCIndexOutOfRangeError(
            fast_format_str(
                _("Index ${{i}} is outside 1..${{top}}."),
                fmt={"i": i, "top": params.r_max},
            ),
        )


def y_in_tC_certificate(params: ConstructionParams, i: int) -> Certificate:  # noqa: N802
    """Show y_{i-1} lies in tC.

    y_{i-1} = t (t^{2m-1} y_i + 2 a_i t^{2m-n_i-2} w_i + a_i^2 t^{2m-1})
    with m = m_i; every exponent is non-negative because 2m >= n_i + 2.

    Args:
        params (ConstructionParams): Construction data.
        i (int): Index, 1 <= i <= r_max.

    Returns:
        Certificate: Three multipliers of the generator t.

    """
    _check_inner_index(params, i)
    base = params.base
    a = params.a[i]
    m = params.m(i)
    t = CElem.constant(params, base.t, i)
    w_coeff = base.shift(a * 2, 2 * m - params.n[i] - 2)
    terms = (
        (CElem.y(params, i).shift(2 * m - 1), t),
        (CElem.w(params, i).scale(w_coeff), t),
        (CElem.constant(params, base.shift(a * a, 2 * m - 1), i), t),
    )
    return Certificate(f"y_{i - 1} in tC", CElem.y(params, i - 1), terms)


def trick2_identity(params: ConstructionParams, i: int) -> bool:
    """Check the square of z_{i-1} - a_{i-1} = t^m z_i.

    (z_{i-1}-a_{i-1})^2 = t^{2m}((z_i-a_i)^2 - a_i^2) + 2 a_i t^{2m} z_i.

    Args:
        params (ConstructionParams): Construction data.
        i (int): Index, 1 <= i <= r_max.

    Returns:
        bool: True if all three expressions agree in B.

    """
    _check_inner_index(params, i)
    base = params.base
    a = params.a[i]
    m = params.m(i)
    lhs = BElem.shifted_generator(params, i - 1) ** 2
    middle = BElem.generator(params, i).shift(m) ** 2
    y_i = BElem.shifted_generator(params, i) ** 2
    rhs = (y_i - a * a).shift(2 * m) + BElem.generator(params, i).scale(
        base.shift(a * 2, 2 * m),
    )
    return lhs == middle == rhs


def trick1_holds(params: ConstructionParams, r: int) -> bool:
    """Check t(z_0 - a_0) - t^{n_r+1}(z_r - a_r) is the element of A.

    Args:
        params (ConstructionParams): Construction data.
        r (int): Index.

    Returns:
        bool: True if the difference equals `trick1_difference(r)` in B.

    """
    difference = to_b(CElem.w(params, 0)) - to_b(CElem.w(params, r))
    return difference == trick1_difference(params, r)


def m2_equals_tm(
    params: ConstructionParams,
) -> tuple[list[Certificate], list[Certificate]]:
    """Certify M^2 = tM for M = (t, w_0).

    Args:
        params (ConstructionParams): Construction data.

    Returns:
        tuple[list[Certificate], list[Certificate]]: Generators of M^2
            expressed in the generators t^2, t w_0 of tM, and the
            generators of tM expressed as products of two elements of M.

    """
    base = params.base
    one = CElem.constant(params, 1)
    t = CElem.constant(params, base.t)
    w0 = CElem.w(params, 0)
    t2 = t * t
    tw0 = t * w0
    forward = [
        Certificate("t^2 in tM", t2, ((one, t2),)),
        Certificate("t*w_0 in tM", tw0, ((one, tw0),)),
        Certificate("w_0^2 in tM", w0 * w0, ((CElem.y(params, 0), t2),)),
    ]
    backward = [
        Certificate("t*t in M^2", t2, ((t, t),)),
        Certificate("t*w_0 in M^2", tw0, ((t, w0),)),
    ]
    return forward, backward


@dataclass(frozen=True)
class IntegralEquation:
    """z_i^2 + b z_i + c = 0 with b, c in C."""

    i: int
    coefficients: tuple[CElem, CElem, CElem]

    def residual(self) -> BElem:
        """Evaluate the equation at z_i.

        Returns:
            BElem: Zero when the equation holds.

        """
        params = self.coefficients[0].params
        z = BElem.generator(params, self.i)
        lead, mid, const = (to_b(c) for c in self.coefficients)
        return lead * z * z + mid * z + const

    def verify(self) -> bool:
        """Check the equation exactly.

        Returns:
            bool: True if the residual is zero.

        """
        return self.residual().is_zero


def integral_equation(
    params: ConstructionParams,
    i: int,
    *,
    corrupt: bool = False,
) -> IntegralEquation:
    """Get the monic equation Z^2 - 2 a_i Z + (a_i^2 - y_i) of z_i over C.

    Args:
        params (ConstructionParams): Construction data.
        i (int): Index, 0 <= i <= r_max+1.
        corrupt (bool): Add 1 to the constant term.

    Returns:
        IntegralEquation: The equation.

    """
    params.check_index(i)
    a = params.a[i]
    y = CElem.y(params, i)
    const = CElem.constant(params, a * a, i) - y
    if corrupt:
        const = const + 1
    return IntegralEquation(
        i,
        (
            CElem.constant(params, 1, i),
            CElem.constant(params, -(a * 2), i),
            const,
        ),
    )


@dataclass(frozen=True)
class FracWitness:
    """z_0 = num / den in Frac C."""

    num: CElem
    den: CElem
    precision: int
    series_ok: bool
    exact_ok: bool


def frac_witness(
    params: ConstructionParams,
    precision: int = 64,
    table: ZSeriesTable | None = None,
) -> FracWitness:
    """Show z_0 = (w_0 + a_0 t) / t.

    Args:
        params (ConstructionParams): Construction data.
        precision (int): Series precision of the check.
        table (ZSeriesTable | None): Series source.

    Returns:
        FracWitness: The fraction and the outcome of both checks.

    """
    base = params.base
    source = table if table is not None else params.series
    den = CElem.constant(params, base.t)
    num = CElem.w(params, 0) + base.shift(params.a[0], 1)
    series_ok = to_series(to_b(num), precision, source) == ts_mul(
        to_series(to_b(den), precision, source),
        source(0, precision),
    )
    exact_ok = to_b(num) == BElem.generator(params, 0).shift(1)
    return FracWitness(num, den, precision, series_ok, exact_ok)


@dataclass(frozen=True)
class Ex2Evidence:
    """The degree-1 u-coefficient at `level` versus what C requires."""

    level: int
    coefficient_valuation: int | float
    required_valuation: int

    @property
    def fails(self) -> bool:
        """Whether the coefficient is not divisible enough."""
        return self.coefficient_valuation < self.required_valuation


def ex2_nonmembership(
    params: ConstructionParams,
    r: int,
    max_level: int,
) -> list[Ex2Evidence]:
    """Show t^{n_r}(z_r - a_r) is not in C at levels r..max_level.

    Args:
        params (ConstructionParams): Construction data.
        r (int): Index, 0 <= r <= r_max.
        max_level (int): Highest level to inspect.

    Returns:
        list[Ex2Evidence]: One record per level.

    """
    params.check_index(r)
    g = BElem.shifted_generator(params, r).shift(params.n[r])
    evidence: list[Ex2Evidence] = []
    for s in range(r, min(max_level, params.top_level) + 1):
        g = coerce_up(g, s)
        q = u_coefficients(g)
        linear = q[1] if len(q) > 1 else params.base.zero
        evidence.append(Ex2Evidence(s, valuation(linear), params.n[s] + 1))
    return evidence


@dataclass(frozen=True)
class NilpotentWitness:
    """x_r = w_r is not in tC, while x_r^2 lies in t^{e_star} C.

    `bare_w_valuations` lists, per level, the valuation of the coefficient
    of the word w_s in the normal form of x_r; zero means not divisible by
    t. `unshifted_e_star` is the same exponent for t^{n_r+1} z_r.
    """

    r: int
    bare_w_valuations: tuple[tuple[int, int | float], ...]
    quotient_membership: NotMember | Member
    e_star: int
    unshifted_e_star: int
    e_star_level: int
    unshifted_failures: tuple[LevelFailure, ...] = field(default=())

    @property
    def not_in_tc(self) -> bool:
        """Whether every level shows x_r outside tC."""
        return all(v == 0 for _s, v in self.bare_w_valuations) and isinstance(
            self.quotient_membership,
            NotMember,
        )


def _best_exponent(
    square: BElem,
    top: int,
    max_level: int,
) -> tuple[int, int, tuple[LevelFailure, ...]]:
    """Largest e <= top with square / t^e in C, by membership search."""
    quotients = [square]
    for _e in range(top):
        quotients.append(divide_by_t(quotients[-1]))
    failures: list[LevelFailure] = []
    for e in range(top, -1, -1):
        outcome = c_membership(quotients[e], max_level)
        if isinstance(outcome, Member):
            return e, outcome.level, tuple(failures)
        failures.extend(outcome.failures[-1:])
    return 0, square.level, tuple(failures)


def nilpotent_witness(
    params: ConstructionParams,
    r: int,
    max_level: int,
) -> NilpotentWitness:
    """Build the witness for x_r = t^{n_r+1}(z_r - a_r).

    Args:
        params (ConstructionParams): Construction data.
        r (int): Index, 0 <= r <= r_max.
        max_level (int): Highest level searched.

    Returns:
        NilpotentWitness: The evidence.

    """
    params.check_index(r)
    x = CElem.w(params, r)
    bare: list[tuple[int, int | float]] = []
    for s in range(r, min(max_level, params.top_level) + 1):
        x_s = coerce_c_to(x, s)
        bare.append((s, valuation(x_s.bare_w_term())))
    quotient = BElem.shifted_generator(params, r).shift(params.n[r])
    quotient_membership = c_membership(quotient, max_level)
    top = 2 * params.n[r] + 2
    x_b = to_b(x)
    e_star, level, _failures = _best_exponent(x_b * x_b, top, max_level)
    plain = BElem.generator(params, r).shift(params.n[r] + 1)
    unshifted, _level, failures = _best_exponent(plain * plain, top, max_level)
    logger.debug(
        "x_%d: e_star=%d, unshifted exponent=%d.",
        r,
        e_star,
        unshifted,
    )
    return NilpotentWitness(
        r,
        tuple(bare),
        quotient_membership,
        e_star,
        unshifted,
        level,
        failures,
    )

