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

"""The ring B = A[z_0, z_1, ...] as the increasing union of the A[z_s].

An element is a polynomial in z_s over A at a level s <= r_max+1. Levels
only grow: z_s = a_s + t^{m_{s+1}} z_{s+1} embeds A[z_s] into A[z_{s+1}].
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

from dvrcert.algebra.base_ring import AElem, ResidueElem, residue, valuation
from dvrcert.algebra.series import (
    AtLeast,
    TruncSeries,
    from_aelem,
    ts_add,
    ts_mul,
    val_lower_bound,
)
from dvrcert.lib.exceptions import (
    DCInternalError,
    DCLevelOutOfRangeError,
    DCNotInKernelError,
    DCValueError,
    DCZeroInputError,
)
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    from dvrcert.algebra.construction import ConstructionParams, ZSeriesTable

__all__ = [
    "BElem",
    "UnitSplit",
    "b_add",
    "b_mul",
    "b_neg",
    "b_sub",
    "b_valuation",
    "coerce_up",
    "divide_by_t",
    "eval_k",
    "from_u_coefficients",
    "to_series",
    "u_coefficients",
    "unit_normalize_b",
]


def _trim(coeffs: Iterable[AElem]) -> tuple[AElem, ...]:
    items = list(coeffs)
    while items and items[-1].is_zero:
        items.pop()
    return tuple(items)


def poly_add(p: Sequence[AElem], q: Sequence[AElem]) -> list[AElem]:
    """Add two coefficient lists.

    Args:
        p (Sequence[AElem]): First polynomial.
        q (Sequence[AElem]): Second polynomial.

    Returns:
        list[AElem]: The sum, untrimmed.

    """
    if len(p) < len(q):
        p, q = q, p
    result = list(p)
    for i, coeff in enumerate(q):
        result[i] = result[i] + coeff
    return result


def poly_mul(p: Sequence[AElem], q: Sequence[AElem]) -> list[AElem]:
    """Multiply two nonempty coefficient lists.

    Args:
        p (Sequence[AElem]): First polynomial.
        q (Sequence[AElem]): Second polynomial.

    Returns:
        list[AElem]: The product, untrimmed.

    """
    if not p or not q:
        return []
    zero = p[0].ring.zero
    result = [zero] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x.is_zero:
            continue
        for j, y in enumerate(q):
            if not y.is_zero:
                result[i + j] = result[i + j] + x * y
    return result


def compose_linear(p: Sequence[AElem], c0: AElem, c1: AElem) -> list[AElem]:
    """Substitute x = c0 + c1*x' into p.

    Args:
        p (Sequence[AElem]): Coefficients of p(x).
        c0 (AElem): Constant part.
        c1 (AElem): Linear part.

    Returns:
        list[AElem]: Coefficients of p(c0 + c1*x').

    """
    result: list[AElem] = []
    for coeff in reversed(p):
        result = poly_add(poly_mul(result, [c0, c1]), [coeff])
    return result


def taylor_shift(p: Sequence[AElem], a: AElem) -> list[AElem]:
    """Get the coefficients of p(x + a).

    Args:
        p (Sequence[AElem]): Coefficients of p(x).
        a (AElem): Shift.

    Returns:
        list[AElem]: Coefficients of p(x + a).

    """
    coeffs = list(p)
    size = len(coeffs)
    for i in range(size - 1):
        for j in range(size - 2, i - 1, -1):
            coeffs[j] = coeffs[j] + a * coeffs[j + 1]
    return coeffs


class BElem:
    """An element Σ p_k z_s^k of B at level s.

    Two elements compare equal when they agree after coercion to the
    higher of their levels.
    """

    __slots__ = ("coeffs", "level", "params")

    params: ConstructionParams
    level: int
    coeffs: tuple[AElem, ...]

    def __init__(
        self,
        params: ConstructionParams,
        level: int,
        coeffs: Iterable[AElem],
    ) -> None:
        """Build an element.

        Args:
            params (ConstructionParams): Construction data.
            level (int): The level s.
            coeffs (Iterable[AElem]): p_0, p_1, ... in increasing degree.

        Raises:
            DCLevelOutOfRangeError: If the level is outside 0..r_max+1.

        """
        if not 0 <= level <= params.top_level:
            raise DCLevelOutOfRangeError(
                fast_format_str(
                    _("Level ${{level}} is outside 0..${{top}}."),
                    fmt={"level": level, "top": params.top_level},
                ),
                level=level,
                top_level=params.top_level,
            )
        self.params = params
        self.level = level
        self.coeffs = _trim(coeffs)

    @classmethod
    def constant(
        cls,
        params: ConstructionParams,
        value: AElem | int,
        level: int = 0,
    ) -> BElem:
        """Embed an element of A.

        Args:
            params (ConstructionParams): Construction data.
            value (AElem | int): The constant.
            level (int): Level of the result.

        Returns:
            BElem: The constant polynomial.

        """
        return cls(params, level, [params.base(value)])

    @classmethod
    def generator(cls, params: ConstructionParams, s: int) -> BElem:
        """Get z_s.

        Args:
            params (ConstructionParams): Construction data.
            s (int): Level.

        Returns:
            BElem: z_s at level s.

        """
        base = params.base
        return cls(params, s, [base.zero, base.one])

    @classmethod
    def shifted_generator(cls, params: ConstructionParams, s: int) -> BElem:
        """Get z_s - a_s.

        Args:
            params (ConstructionParams): Construction data.
            s (int): Level.

        Returns:
            BElem: z_s - a_s at level s.

        """
        return cls(params, s, [-params.a[s], params.base.one])

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree in z_s, -1 for zero."""
        return len(self.coeffs) - 1

    def scale(self, value: AElem | int) -> BElem:
        """Multiply by an element of A.

        Args:
            value (AElem | int): The factor.

        Returns:
            BElem: The product, at the same level.

        """
        factor = self.params.base(value)
        return BElem(self.params, self.level, [c * factor for c in self.coeffs])

    def shift(self, exponent: int) -> BElem:
        """Multiply by t^exponent.

        Args:
            exponent (int): Non-negative exponent.

        Returns:
            BElem: The product, at the same level.

        """
        base = self.params.base
        return BElem(
            self.params,
            self.level,
            [base.shift(c, exponent) for c in self.coeffs],
        )

    def __add__(self, other: BElem | AElem | int) -> BElem:
        return b_add(self, _lift(self, other))

    __radd__ = __add__

    def __sub__(self, other: BElem | AElem | int) -> BElem:
        return b_sub(self, _lift(self, other))

    def __rsub__(self, other: BElem | AElem | int) -> BElem:
        return b_sub(_lift(self, other), self)

    def __mul__(self, other: BElem | AElem | int) -> BElem:
        if isinstance(other, AElem | int):
            return self.scale(other)
        return b_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> BElem:
        return b_neg(self)

    def __pow__(self, exponent: int) -> BElem:
        if exponent < 0:
            msg = _("Negative powers are not elements of B.")
            raise DCValueError(msg)
        result = BElem.constant(self.params, 1, self.level)
        base = self
        while exponent:
            if exponent & 1:
                result = b_mul(result, base)
            base = b_mul(base, base)
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AElem | int):
            other = _lift(self, other)
        if not isinstance(other, BElem):
            return NotImplemented
        if other.params is not self.params:
            return False
        lhs, rhs = _common(self, other)
        return lhs.coeffs == rhs.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k, coeff in enumerate(self.coeffs):
            if coeff.is_zero:
                continue
            text = str(coeff)
            if k == 0:
                parts.append(f"({text})" if " " in text else text)
                continue
            power = f"z{self.level}" if k == 1 else f"z{self.level}^{k}"
            if text == "1":
                parts.append(power)
            else:
                parts.append(f"({text})*{power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BElem(level={self.level}, {self})"


def _lift(f: BElem, value: BElem | AElem | int) -> BElem:
    if isinstance(value, BElem):
        return value
    return BElem.constant(f.params, value, f.level)


def coerce_up(f: BElem, target_level: int) -> BElem:
    """Rewrite f at a higher level.

    Args:
        f (BElem): The element.
        target_level (int): Level s' with f.level <= s' <= r_max+1.

    Returns:
        BElem: The same element as a polynomial in z_{s'}.

    Raises:
        DCLevelOutOfRangeError: If the target level is not reachable.

    """
    params = f.params
    if not f.level <= target_level <= params.top_level:
        raise DCLevelOutOfRangeError(
            fast_format_str(
                _("Cannot coerce from level ${{src}} to level ${{dst}}."),
                fmt={"src": f.level, "dst": target_level},
            ),
            level=target_level,
            top_level=params.top_level,
        )
    coeffs: Sequence[AElem] = f.coeffs
    if target_level > f.level and len(coeffs) > 1:
        c0, c1 = params.transition(f.level, target_level)
        coeffs = compose_linear(coeffs, c0, c1)
    return BElem(params, target_level, coeffs)


def _common(f: BElem, g: BElem) -> tuple[BElem, BElem]:
    if f.params is not g.params:
        msg = _("Elements belong to different constructions.")
        raise DCValueError(msg)
    level = max(f.level, g.level)
    return coerce_up(f, level), coerce_up(g, level)


def b_add(f: BElem, g: BElem) -> BElem:
    """Add two elements at their common level.

    Args:
        f (BElem): First summand.
        g (BElem): Second summand.

    Returns:
        BElem: f + g.

    """
    f, g = _common(f, g)
    return BElem(f.params, f.level, poly_add(f.coeffs, g.coeffs))


def b_neg(f: BElem) -> BElem:
    """Negate an element.

    Args:
        f (BElem): The element.

    Returns:
        BElem: -f.

    """
    return BElem(f.params, f.level, [-c for c in f.coeffs])


def b_sub(f: BElem, g: BElem) -> BElem:
    """Subtract two elements.

    Args:
        f (BElem): Minuend.
        g (BElem): Subtrahend.

    Returns:
        BElem: f - g.

    """
    return b_add(f, b_neg(g))


def b_mul(f: BElem, g: BElem) -> BElem:
    """Multiply two elements at their common level.

    Args:
        f (BElem): First factor.
        g (BElem): Second factor.

    Returns:
        BElem: f * g.

    """
    f, g = _common(f, g)
    return BElem(f.params, f.level, poly_mul(f.coeffs, g.coeffs))


def eval_k(f: BElem) -> ResidueElem:
    """Evaluate t -> 0, z_r -> residue of a_r.

    Args:
        f (BElem): The element.

    Returns:
        ResidueElem: Its image in k.

    """
    field = f.params.base.residue_field
    point = residue(f.params.a[f.level])
    total = field.zero
    for coeff in reversed(f.coeffs):
        total = total * point + residue(coeff)
    return total


def to_series(
    f: BElem,
    precision: int,
    table: ZSeriesTable | None = None,
) -> TruncSeries:
    """Substitute the series of z_s into f.

    Args:
        f (BElem): The element.
        precision (int): N.
        table (ZSeriesTable | None): Series source. Defaults to the
            uncorrupted table of the construction.

    Returns:
        TruncSeries: f modulo t^N.

    """
    source = table if table is not None else f.params.series
    z = source(f.level, precision)
    total = from_aelem(f.params.base.zero, precision)
    for coeff in reversed(f.coeffs):
        total = ts_add(ts_mul(total, z), from_aelem(coeff, precision))
    return total


def b_valuation(f: BElem, cap: int) -> int | AtLeast:
    """Get the t-adic valuation visible below a cap.

    Args:
        f (BElem): The element.
        cap (int): N.

    Returns:
        int | AtLeast: The valuation, or `AtLeast(cap)`.

    """
    return val_lower_bound(to_series(f, cap))


def _residue_is_zero(f: BElem, value: ResidueElem) -> bool:
    return value == f.params.base.residue_field.zero


def divide_by_t(f: BElem) -> BElem:
    """Divide an element of the kernel tB by t.

    Args:
        f (BElem): Element with eval_k(f) = 0.

    Returns:
        BElem: g with t*g = f.

    Raises:
        DCNotInKernelError: If eval_k(f) != 0.
        DCLevelOutOfRangeError: If a coercion beyond r_max+1 is needed.
        DCInternalError: If the coerced coefficients are not divisible.

    """
    if not _residue_is_zero(f, eval_k(f)):
        raise DCNotInKernelError(
            fast_format_str(
                _("${{elem}} does not vanish at t = 0 and is not in tB."),
                fmt={"elem": str(f)},
            ),
        )
    base = f.params.base
    if any(valuation(c) < 1 for c in f.coeffs):
        if f.level == f.params.top_level:
            raise DCLevelOutOfRangeError(
                _("Division by t needs a level above r_max+1."),
                level=f.level + 1,
                top_level=f.params.top_level,
            )
        logger.debug("divide_by_t: coercing level %d upwards.", f.level)
        f = coerce_up(f, f.level + 1)
        if any(valuation(c) < 1 for c in f.coeffs):
            raise DCInternalError(
                fast_format_str(
                    _("Coefficients of ${{elem}} are not divisible by t."),
                    fmt={"elem": str(f)},
                ),
            )
    return BElem(f.params, f.level, [base.unshift(c, 1) for c in f.coeffs])


@dataclass(frozen=True)
class UnitSplit:
    """f = t^n * u with eval_k(u) != 0."""

    n: int
    unit: BElem


def unit_normalize_b(f: BElem, cap: int) -> UnitSplit | AtLeast:
    """Split f = t^n * u with u a unit of the localization B_m.

    Args:
        f (BElem): Nonzero element.
        cap (int): Give up once n reaches this bound.

    Returns:
        UnitSplit | AtLeast: The split, or `AtLeast(cap)`.

    Raises:
        DCZeroInputError: If f is zero.

    """
    if f.is_zero:
        msg = _("Zero has no unit part.")
        raise DCZeroInputError(msg)
    n = 0
    u = f
    while _residue_is_zero(u, eval_k(u)):
        if n >= cap:
            return AtLeast(cap)
        u = divide_by_t(u)
        n += 1
    return UnitSplit(n, u)


def u_coefficients(f: BElem) -> list[AElem]:
    """Expand f in powers of u = z_s - a_s.

    Args:
        f (BElem): The element at level s.

    Returns:
        list[AElem]: q_0, q_1, ... with f = Σ q_j u^j.

    """
    return taylor_shift(f.coeffs, f.params.a[f.level])


def from_u_coefficients(
    params: ConstructionParams,
    level: int,
    coeffs: Sequence[AElem],
) -> BElem:
    """Build Σ q_j (z_s - a_s)^j.

    Args:
        params (ConstructionParams): Construction data.
        level (int): The level s.
        coeffs (Sequence[AElem]): q_0, q_1, ...

    Returns:
        BElem: The element at level s.

    """
    return BElem(params, level, taylor_shift(coeffs, -params.a[level]))
