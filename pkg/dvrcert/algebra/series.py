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

"""Truncated completion Â/t^N, the independent oracle for ring arithmetic.

In poly mode a series is a polynomial in t of degree < N over k. In padic
mode it is a single residue modulo p^N; digits are extracted on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc

from dvrcert.algebra.base_ring import (
    AElem,
    BaseRing,
    PAdicBaseRing,
    PolyBaseRing,
)
from dvrcert.lib.exceptions import DCValueError
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _

__all__ = [
    "AtLeast",
    "TruncSeries",
    "from_aelem",
    "series_from_coefficients",
    "ts_add",
    "ts_mul",
    "ts_neg",
    "ts_sub",
    "val_lower_bound",
]


@dataclass(frozen=True)
class AtLeast:
    """A valuation known only to be at least `bound`."""

    bound: int

    def __str__(self) -> str:
        return f">= {self.bound}"


class TruncSeries:
    """An element of Â/t^N."""

    __slots__ = ("precision", "ring", "value")

    ring: BaseRing
    precision: int
    value: Any

    def __init__(self, base: BaseRing, precision: int, value: Any) -> None:  # noqa: ANN401
        """Wrap an already reduced value.

        Args:
            base (BaseRing): Base ring.
            precision (int): N >= 1.
            value (Any): Polynomial of degree < N, or residue mod p^N.

        """
        if precision < 1:
            msg = fast_format_str(
                _("Series precision must be positive, got ${{n}}."),
                fmt={"n": precision},
            )
            raise DCValueError(msg)
        self.ring = base
        self.precision = precision
        self.value = value

    @property
    def modulus(self) -> int:
        """p^N in padic mode."""
        if not isinstance(self.ring, PAdicBaseRing):
            msg = _("Only padic series have an integer modulus.")
            raise DCValueError(msg)
        return self.ring.prime**self.precision

    def truncate(self, precision: int) -> TruncSeries:
        """Reduce to a lower precision.

        Args:
            precision (int): New precision, at most the current one.

        Returns:
            TruncSeries: The reduced series.

        """
        precision = min(precision, self.precision)
        if precision == self.precision:
            return self
        base = self.ring
        if isinstance(base, PAdicBaseRing):
            modulus = base.prime**precision
            return TruncSeries(base, precision, self.value % modulus)
        assert isinstance(base, PolyBaseRing)
        return TruncSeries(
            base,
            precision,
            rs_trunc(self.value, base.gen, precision),
        )

    def shift(self, exponent: int) -> TruncSeries:
        """Multiply by t^exponent.

        Args:
            exponent (int): Non-negative exponent.

        Returns:
            TruncSeries: The shifted series at the same precision.

        """
        base = self.ring
        if isinstance(base, PAdicBaseRing):
            return TruncSeries(
                base,
                self.precision,
                self.value * base.prime**exponent % self.modulus,
            )
        assert isinstance(base, PolyBaseRing)
        shifted = self.value
        if shifted:
            shifted = shifted.mul_monom((exponent,))
        return TruncSeries(
            base,
            self.precision,
            rs_trunc(shifted, base.gen, self.precision),
        )

    def coefficients(self) -> list[Any]:
        """Get c_0..c_{N-1}.

        Returns:
            list[Any]: Residue field elements in poly mode, base-p digits in
                padic mode.

        """
        base = self.ring
        if isinstance(base, PAdicBaseRing):
            digits = []
            rest = self.value
            for _i in range(self.precision):
                rest, digit = divmod(rest, base.prime)
                digits.append(digit)
            return digits
        zero = base.residue_field.zero
        coeffs = [zero] * self.precision
        for monom, coeff in self.value.items():
            coeffs[monom[0]] = coeff
        return coeffs

    @property
    def is_zero(self) -> bool:
        """Whether every stored coefficient vanishes."""
        return not self.value

    def __add__(self, other: TruncSeries) -> TruncSeries:
        return ts_add(self, other)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return ts_sub(self, other)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        return ts_mul(self, other)

    def __neg__(self) -> TruncSeries:
        return ts_neg(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.precision == other.precision
            and self.value == other.value
        )

    def __hash__(self) -> int:
        if isinstance(self.value, int):
            return hash((self.precision, self.value))
        return hash((self.precision, frozenset(self.value.items())))

    def __str__(self) -> str:
        base = self.ring
        if isinstance(base, PAdicBaseRing):
            return f"{self.value} mod {base.prime}^{self.precision}"
        assert isinstance(base, PolyBaseRing)
        return f"{base.poly_str(self.value)} + O(t^{self.precision})"

    def __repr__(self) -> str:
        return f"TruncSeries({self})"


def _common(x: TruncSeries, y: TruncSeries) -> tuple[TruncSeries, TruncSeries]:
    if x.ring is not y.ring:
        msg = _("Series belong to different base rings.")
        raise DCValueError(msg)
    precision = min(x.precision, y.precision)
    return x.truncate(precision), y.truncate(precision)


def from_aelem(a: AElem, precision: int) -> TruncSeries:
    """Embed an element of A into Â/t^N.

    Args:
        a (AElem): The element.
        precision (int): N >= 1.

    Returns:
        TruncSeries: The image of `a` modulo t^N.

    """
    base = a.ring
    if isinstance(base, PAdicBaseRing):
        modulus = base.prime**precision
        return TruncSeries(
            base,
            precision,
            a.num * pow(a.den, -1, modulus) % modulus,
        )
    assert isinstance(base, PolyBaseRing)
    gen = base.gen
    if a.den == base.poly_ring.one:
        return TruncSeries(base, precision, rs_trunc(a.num, gen, precision))
    inverse = rs_series_inversion(a.den, gen, precision)
    product = rs_mul(a.num, inverse, gen, precision)
    return TruncSeries(base, precision, _trim(product))


def series_from_coefficients(
    base: BaseRing,
    coefficients: list[AElem],
    exponents: list[int],
    precision: int,
) -> TruncSeries:
    """Build Σ c_k t^{e_k} modulo t^N.

    Args:
        base (BaseRing): Base ring.
        coefficients (list[AElem]): The c_k.
        exponents (list[int]): The e_k, same length.
        precision (int): N.

    Returns:
        TruncSeries: The truncated sum.

    """
    total = TruncSeries(base, precision, _zero_value(base))
    for coeff, exponent in zip(coefficients, exponents, strict=True):
        if exponent >= precision:
            continue
        total = ts_add(total, from_aelem(coeff, precision).shift(exponent))
    return total


def _zero_value(base: BaseRing) -> Any:  # noqa: ANN401
    if isinstance(base, PAdicBaseRing):
        return 0
    assert isinstance(base, PolyBaseRing)
    return base.poly_ring.zero


def _trim(poly: Any) -> Any:  # noqa: ANN401
    return poly.ring.from_dict({m: c for m, c in poly.items() if c})


def ts_add(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    """Add two series modulo t^{min(Nx, Ny)}.

    Args:
        x (TruncSeries): First summand.
        y (TruncSeries): Second summand.

    Returns:
        TruncSeries: The sum.

    """
    x, y = _common(x, y)
    if isinstance(x.ring, PAdicBaseRing):
        return TruncSeries(x.ring, x.precision, (x.value + y.value) % x.modulus)
    return TruncSeries(x.ring, x.precision, x.value + y.value)


def ts_neg(x: TruncSeries) -> TruncSeries:
    """Negate a series.

    Args:
        x (TruncSeries): The series.

    Returns:
        TruncSeries: -x.

    """
    if isinstance(x.ring, PAdicBaseRing):
        return TruncSeries(x.ring, x.precision, -x.value % x.modulus)
    return TruncSeries(x.ring, x.precision, -x.value)


def ts_sub(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    """Subtract two series.

    Args:
        x (TruncSeries): Minuend.
        y (TruncSeries): Subtrahend.

    Returns:
        TruncSeries: x - y.

    """
    return ts_add(x, ts_neg(y))


def ts_mul(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    """Multiply two series modulo t^{min(Nx, Ny)}.

    Args:
        x (TruncSeries): First factor.
        y (TruncSeries): Second factor.

    Returns:
        TruncSeries: The product.

    """
    x, y = _common(x, y)
    base = x.ring
    if isinstance(base, PAdicBaseRing):
        return TruncSeries(base, x.precision, x.value * y.value % x.modulus)
    assert isinstance(base, PolyBaseRing)
    if not x.value or not y.value:
        return TruncSeries(base, x.precision, base.poly_ring.zero)
    product = rs_mul(x.value, y.value, base.gen, x.precision)
    return TruncSeries(base, x.precision, _trim(product))


def val_lower_bound(x: TruncSeries) -> int | AtLeast:
    """Get the valuation visible in a truncation.

    Args:
        x (TruncSeries): The series.

    Returns:
        int | AtLeast: Index of the lowest nonzero coefficient, or
            `AtLeast(N)` when every coefficient vanishes.

    """
    if x.is_zero:
        return AtLeast(x.precision)
    base = x.ring
    if isinstance(base, PAdicBaseRing):
        value = x.value
        count = 0
        while value % base.prime == 0:
            value //= base.prime
            count += 1
        return count
    return min(monom[0] for monom in x.value.itermonoms())
