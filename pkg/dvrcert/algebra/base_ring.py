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

"""Exact arithmetic in the base DVR A with local parameter t.

Two models of A are supported:

* poly mode: A = k[t] localized at (t), k the rationals or a prime field.
  Elements are reduced fractions num/den of polynomials in t whose
  denominator has constant term 1.
* padic mode: A = Z localized at (p), t = p. Elements are reduced rationals
  with a positive denominator prime to p.

Both share the `AElem` value type. All values are immutable and every
operation is pure.
"""

from __future__ import annotations

import enum
import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Any, TypeAlias

from beartype import beartype
from sympy import GF, QQ, isprime
from sympy.ntheory import multiplicity
from sympy.polys.rings import PolyElement, ring

from dvrcert.lib.exceptions import (
    DCConfigError,
    DCNotAUnitError,
    DCValueError,
    DCZeroInputError,
)
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _

if TYPE_CHECKING:
    from sympy.polys.domains.domain import Domain

__all__ = [
    "AElem",
    "BaseRing",
    "BaseRingConfig",
    "BaseRingMode",
    "PAdicBaseRing",
    "PolyBaseRing",
    "ResidueElem",
    "ResidueFieldKind",
    "divide_by_t_power",
    "invert_unit",
    "residue",
    "unit_part_split",
    "valuation",
]

# An element of the residue field k, as a sympy domain element of
# `BaseRing.residue_field`.
ResidueElem: TypeAlias = Any

INFINITY = math.inf


class BaseRingMode(enum.Enum):
    """How A is modelled."""

    POLY = "poly"
    PADIC = "padic"


class ResidueFieldKind(enum.Enum):
    """Residue field of the poly mode."""

    RATIONALS = "rationals"
    PRIME_FIELD = "prime-field"


@dataclass(frozen=True)
class BaseRingConfig:
    """Settings of the base ring."""

    mode: BaseRingMode = BaseRingMode.POLY
    field: ResidueFieldKind = ResidueFieldKind.RATIONALS
    q: int | None = None
    p: int | None = None

    def violations(self) -> list[str]:
        """Check the settings.

        Returns:
            list[str]: Human readable problems, empty if the settings are
                usable.

        """
        problems: list[str] = []
        if self.mode == BaseRingMode.PADIC:
            if self.p is None or not isprime(self.p):
                problems.append(
                    fast_format_str(
                        _("padic mode needs a prime p, got ${{p}}."),
                        fmt={"p": self.p},
                    ),
                )
        elif self.field == ResidueFieldKind.PRIME_FIELD and (
            self.q is None or not isprime(self.q)
        ):
            problems.append(
                fast_format_str(
                    _("prime-field needs a prime q, got ${{q}}."),
                    fmt={"q": self.q},
                ),
            )
        return problems

    def build(self) -> BaseRing:
        """Build the ring described by these settings.

        Returns:
            BaseRing: The base ring.

        Raises:
            DCConfigError: If the settings are invalid.

        """
        problems = self.violations()
        if problems:
            raise DCConfigError("; ".join(problems))
        if self.mode == BaseRingMode.PADIC:
            return PAdicBaseRing(self)
        return PolyBaseRing(self)

    def describe(self) -> str:
        """Get a short description.

        Returns:
            str: Description such as "poly/F_101" or "padic/5".

        """
        if self.mode == BaseRingMode.PADIC:
            return f"padic/{self.p}"
        if self.field == ResidueFieldKind.PRIME_FIELD:
            return f"poly/F_{self.q}"
        return "poly/Q"


class AElem:
    """Exact element of the base DVR A.

    Use the owning `BaseRing` to create elements; the constructor trusts
    that `num`/`den` are already in canonical form.
    """

    __slots__ = ("_hash", "den", "num", "ring")

    ring: BaseRing
    num: Any
    den: Any

    def __init__(self, base: BaseRing, num: Any, den: Any) -> None:  # noqa: ANN401
        """Wrap a canonical representation.

        Args:
            base (BaseRing): Owning ring.
            num (Any): Canonical numerator.
            den (Any): Canonical denominator.

        """
        self.ring = base
        self.num = num
        self.den = den
        self._hash: int | None = None

    def _coerce(self, other: object) -> AElem | None:
        if isinstance(other, AElem):
            if other.ring is not self.ring:
                msg = _("Elements belong to different base rings.")
                raise DCValueError(msg)
            return other
        if isinstance(other, int | Fraction):
            return self.ring(other)
        return None

    def __add__(self, other: object) -> AElem:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.ring.add(self, rhs)

    __radd__ = __add__

    def __sub__(self, other: object) -> AElem:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.ring.add(self, self.ring.neg(rhs))

    def __rsub__(self, other: object) -> AElem:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return self.ring.add(lhs, self.ring.neg(self))

    def __mul__(self, other: object) -> AElem:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.ring.mul(self, rhs)

    __rmul__ = __mul__

    def __neg__(self) -> AElem:
        return self.ring.neg(self)

    def __pow__(self, exponent: int) -> AElem:
        if exponent < 0:
            return invert_unit(self) ** (-exponent)
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = self.ring(other)
        if not isinstance(other, AElem):
            return NotImplemented
        return (
            other.ring is self.ring
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = self.ring.hash_of(self)
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero element."""
        return not self.num

    def valuation(self) -> int | float:
        """Get the t-adic valuation.

        Returns:
            int | float: The valuation, `math.inf` for zero.

        """
        return valuation(self)

    def is_unit(self) -> bool:
        """Whether this element is a unit of A.

        Returns:
            bool: True if the valuation is zero.

        """
        return valuation(self) == 0

    def __str__(self) -> str:
        return self.ring.to_str(self)

    def __repr__(self) -> str:
        return f"AElem({self.ring.config.describe()}, {self.ring.to_str(self)})"


class BaseRing(ABC):
    """The DVR A together with its residue field k."""

    config: BaseRingConfig
    residue_field: Domain

    def __init__(self, config: BaseRingConfig) -> None:
        """Initialize the ring.

        Args:
            config (BaseRingConfig): Validated settings.

        """
        self.config = config
        self._zero: AElem | None = None
        self._one: AElem | None = None
        self._t: AElem | None = None

    @property
    def zero(self) -> AElem:
        """The zero element."""
        if self._zero is None:
            self._zero = self(0)
        return self._zero

    @property
    def one(self) -> AElem:
        """The unit element."""
        if self._one is None:
            self._one = self(1)
        return self._one

    @property
    def t(self) -> AElem:
        """The local parameter."""
        if self._t is None:
            self._t = self.make_t()
        return self._t

    def t_power(self, exponent: int) -> AElem:
        """Get t to a non-negative power.

        Args:
            exponent (int): The exponent.

        Returns:
            AElem: t^exponent.

        """
        return self.shift(self.one, exponent)

    @property
    def characteristic(self) -> int:
        """Characteristic of the residue field k."""
        return int(self.residue_field.characteristic())

    def __call__(self, value: int | Fraction | AElem) -> AElem:
        """Coerce a Python number into A.

        Args:
            value (int | Fraction | AElem): The value.

        Returns:
            AElem: The element.

        Raises:
            DCValueError: If the value does not lie in A.

        """
        if isinstance(value, AElem):
            return value
        frac = Fraction(value)
        return self.from_fraction(frac)

    def residue_str(self, value: ResidueElem) -> str:
        """Render an element of k.

        Args:
            value (ResidueElem): The residue.

        Returns:
            str: Printable form.

        """
        return str(self.residue_field.to_sympy(value))

    @abstractmethod
    def from_fraction(self, value: Fraction) -> AElem:
        """Build an element from a rational constant."""

    @abstractmethod
    def make_t(self) -> AElem:
        """Build the local parameter."""

    @abstractmethod
    def add(self, x: AElem, y: AElem) -> AElem:
        """Add two elements."""

    @abstractmethod
    def mul(self, x: AElem, y: AElem) -> AElem:
        """Multiply two elements."""

    @abstractmethod
    def neg(self, x: AElem) -> AElem:
        """Negate an element."""

    @abstractmethod
    def num_valuation(self, x: AElem) -> int:
        """Valuation of a nonzero element (the denominator is a unit)."""

    @abstractmethod
    def shift(self, x: AElem, exponent: int) -> AElem:
        """Multiply by t^exponent, exponent >= 0."""

    @abstractmethod
    def unshift(self, x: AElem, exponent: int) -> AElem:
        """Divide by t^exponent when the valuation allows it."""

    @abstractmethod
    def inverse(self, x: AElem) -> AElem:
        """Invert a unit."""

    @abstractmethod
    def residue_of(self, x: AElem) -> ResidueElem:
        """Reduce modulo t."""

    @abstractmethod
    def lift_residue(self, value: ResidueElem) -> AElem:
        """Lift an element of k to a constant of A."""

    @abstractmethod
    def to_str(self, x: AElem) -> str:
        """Render an element."""

    @abstractmethod
    def hash_of(self, x: AElem) -> int:
        """Hash an element, alike with an equal rational constant."""

    @abstractmethod
    def random_element(
        self,
        rng: random.Random,
        *,
        max_valuation: int = 0,
        unit: bool = False,
    ) -> AElem:
        """Sample an element.

        Args:
            rng (random.Random): Seeded generator.
            max_valuation (int): The sample is t^v times a unit with
                v <= max_valuation (v = 0 when `unit`).
            unit (bool): Sample a unit.

        """


class PolyBaseRing(BaseRing):
    """A = k[t] localized at (t)."""

    def __init__(self, config: BaseRingConfig) -> None:
        """Initialize the ring.

        Args:
            config (BaseRingConfig): Validated settings.

        """
        super().__init__(config)
        if config.field == ResidueFieldKind.PRIME_FIELD:
            self.residue_field = GF(config.q)
        else:
            self.residue_field = QQ
        self.poly_ring, self.gen = ring("t", self.residue_field)

    def element(self, num: PolyElement, den: PolyElement) -> AElem:
        """Build a canonical element from a fraction.

        Args:
            num (PolyElement): Numerator.
            den (PolyElement): Denominator with nonzero constant term after
                cancellation.

        Returns:
            AElem: The element.

        Raises:
            DCZeroInputError: If den is zero.
            DCValueError: If the fraction is not in A.

        """
        if not den:
            msg = _("Division by zero in A.")
            raise DCZeroInputError(msg)
        if not num:
            return AElem(self, self.poly_ring.zero, self.poly_ring.one)
        if den != self.poly_ring.one:
            _gcd, num, den = num.cofactors(den)
        lead = den.const()
        if not lead:
            msg = _("The fraction has a pole at t = 0 and is not in A.")
            raise DCValueError(msg)
        if lead != self.residue_field.one:
            num = num.quo_ground(lead)
            den = den.quo_ground(lead)
        return AElem(self, num, den)

    def from_fraction(self, value: Fraction) -> AElem:
        field = self.residue_field
        den = field(value.denominator)
        if not den:
            msg = fast_format_str(
                _("${{value}} is not defined in characteristic ${{char}}."),
                fmt={"value": value, "char": self.characteristic},
            )
            raise DCValueError(msg)
        const = field(value.numerator) / den
        return AElem(self, self.poly_ring.ground_new(const), self.poly_ring.one)

    def make_t(self) -> AElem:
        return AElem(self, self.gen, self.poly_ring.one)

    def _normalized(self, num: PolyElement, den: PolyElement) -> AElem:
        # num/den is already in lowest terms.
        if not num:
            return AElem(self, self.poly_ring.zero, self.poly_ring.one)
        lead = den.const()
        if lead != self.residue_field.one:
            num = num.quo_ground(lead)
            den = den.quo_ground(lead)
        return AElem(self, num, den)

    def _cancel(
        self,
        num: PolyElement,
        den: PolyElement,
    ) -> tuple[PolyElement, PolyElement]:
        # Denominators have a nonzero constant term, so a monomial is coprime.
        if den == self.poly_ring.one or not num or len(num) == 1:
            return num, den
        _gcd, num, den = num.cofactors(den)
        return num, den

    def add(self, x: AElem, y: AElem) -> AElem:
        one = self.poly_ring.one
        if x.den == one and y.den == one:
            return AElem(self, x.num + y.num, one)
        if x.den == one:
            return self._normalized(x.num * y.den + y.num, y.den)
        if y.den == one:
            return self._normalized(x.num + y.num * x.den, x.den)
        if x.den == y.den:
            return self.element(x.num + y.num, x.den)
        return self.element(x.num * y.den + y.num * x.den, x.den * y.den)

    def mul(self, x: AElem, y: AElem) -> AElem:
        one = self.poly_ring.one
        if x.den == one and y.den == one:
            return AElem(self, x.num * y.num, one)
        x_num, y_den = self._cancel(x.num, y.den)
        y_num, x_den = self._cancel(y.num, x.den)
        return self._normalized(x_num * y_num, x_den * y_den)

    def neg(self, x: AElem) -> AElem:
        return AElem(self, -x.num, x.den)

    def num_valuation(self, x: AElem) -> int:
        return min(monom[0] for monom in x.num.itermonoms())

    def shift(self, x: AElem, exponent: int) -> AElem:
        if exponent == 0 or x.is_zero:
            return x
        return AElem(self, x.num.mul_monom((exponent,)), x.den)

    def unshift(self, x: AElem, exponent: int) -> AElem:
        if exponent == 0 or x.is_zero:
            return x
        if self.num_valuation(x) < exponent:
            msg = fast_format_str(
                _("${{elem}} is not divisible by t^${{n}} in A."),
                fmt={"elem": self.to_str(x), "n": exponent},
            )
            raise DCValueError(msg)
        shifted = self.poly_ring.from_dict(
            {(monom[0] - exponent,): coeff for monom, coeff in x.num.items()},
        )
        return AElem(self, shifted, x.den)

    def inverse(self, x: AElem) -> AElem:
        return self.element(x.den, x.num)

    def residue_of(self, x: AElem) -> ResidueElem:
        return x.num.const()

    def lift_residue(self, value: ResidueElem) -> AElem:
        return AElem(self, self.poly_ring.ground_new(value), self.poly_ring.one)

    def poly_str(self, poly: PolyElement) -> str:
        """Render a polynomial in t in ascending order.

        Args:
            poly (PolyElement): The polynomial.

        Returns:
            str: Printable form such as "1 - 2*t + t^3".

        """
        if not poly:
            return "0"
        parts: list[str] = []
        for monom, coeff in sorted(poly.items()):
            text = str(self.residue_field.to_sympy(coeff))
            negative = text.startswith("-")
            text = text.removeprefix("-")
            deg = monom[0]
            if deg == 0:
                body = text
            else:
                power = "t" if deg == 1 else f"t^{deg}"
                body = power if text == "1" else f"{text}*{power}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def to_str(self, x: AElem) -> str:
        if x.den == self.poly_ring.one:
            return self.poly_str(x.num)
        return f"({self.poly_str(x.num)})/({self.poly_str(x.den)})"

    def hash_of(self, x: AElem) -> int:
        one = self.poly_ring.one
        if x.den == one and x.num.is_ground and not self.characteristic:
            const = x.num.const()
            return hash(Fraction(int(const.numerator), int(const.denominator)))
        return hash((frozenset(x.num.items()), frozenset(x.den.items())))

    def _random_unit_poly(self, rng: random.Random, degree: int) -> PolyElement:
        field = self.residue_field
        coeffs = {}
        for deg in range(degree + 1):
            value = field(rng.randint(-4, 4))
            if deg == 0:
                while not value:
                    value = field(rng.randint(-4, 4))
            if value:
                coeffs[(deg,)] = value
        return self.poly_ring.from_dict(coeffs)

    def random_element(
        self,
        rng: random.Random,
        *,
        max_valuation: int = 0,
        unit: bool = False,
    ) -> AElem:
        num = self._random_unit_poly(rng, rng.randint(0, 3))
        den = self.poly_ring.one
        if rng.random() < 0.2:  # noqa: PLR2004
            den = self._random_unit_poly(rng, 1)
        elem = self.element(num, den)
        if unit:
            return elem
        return self.shift(elem, rng.randint(0, max_valuation))


class PAdicBaseRing(BaseRing):
    """A = Z localized at (p), with t = p."""

    def __init__(self, config: BaseRingConfig) -> None:
        """Initialize the ring.

        Args:
            config (BaseRingConfig): Validated settings.

        """
        super().__init__(config)
        self.prime = int(config.p or 0)
        self.residue_field = GF(self.prime)

    def element(self, num: int, den: int) -> AElem:
        """Build a canonical element from a fraction.

        Args:
            num (int): Numerator.
            den (int): Denominator prime to p after cancellation.

        Returns:
            AElem: The element.

        Raises:
            DCZeroInputError: If den is zero.
            DCValueError: If the fraction is not in A.

        """
        if den == 0:
            msg = _("Division by zero in A.")
            raise DCZeroInputError(msg)
        frac = Fraction(num, den)
        if frac.denominator % self.prime == 0:
            msg = fast_format_str(
                _("${{value}} has p in its denominator and is not in A."),
                fmt={"value": frac},
            )
            raise DCValueError(msg)
        return AElem(self, frac.numerator, frac.denominator)

    def from_fraction(self, value: Fraction) -> AElem:
        return self.element(value.numerator, value.denominator)

    def make_t(self) -> AElem:
        return AElem(self, self.prime, 1)

    def add(self, x: AElem, y: AElem) -> AElem:
        if x.den == 1 and y.den == 1:
            return AElem(self, x.num + y.num, 1)
        return self.element(x.num * y.den + y.num * x.den, x.den * y.den)

    def mul(self, x: AElem, y: AElem) -> AElem:
        if x.den == 1 and y.den == 1:
            return AElem(self, x.num * y.num, 1)
        return self.element(x.num * y.num, x.den * y.den)

    def neg(self, x: AElem) -> AElem:
        return AElem(self, -x.num, x.den)

    def num_valuation(self, x: AElem) -> int:
        return int(multiplicity(self.prime, x.num))

    def shift(self, x: AElem, exponent: int) -> AElem:
        return AElem(self, x.num * self.prime**exponent, x.den)

    def unshift(self, x: AElem, exponent: int) -> AElem:
        if x.is_zero or exponent == 0:
            return x
        if self.num_valuation(x) < exponent:
            msg = fast_format_str(
                _("${{elem}} is not divisible by ${{p}}^${{n}} in A."),
                fmt={"elem": self.to_str(x), "p": self.prime, "n": exponent},
            )
            raise DCValueError(msg)
        return AElem(self, x.num // self.prime**exponent, x.den)

    def inverse(self, x: AElem) -> AElem:
        return self.element(x.den, x.num)

    def residue_of(self, x: AElem) -> ResidueElem:
        field = self.residue_field
        return field(x.num) / field(x.den)

    def lift_residue(self, value: ResidueElem) -> AElem:
        digit = int(self.residue_field.to_int(value)) % self.prime
        return AElem(self, digit, 1)

    def to_str(self, x: AElem) -> str:
        if x.den == 1:
            return str(x.num)
        return f"{x.num}/{x.den}"

    def hash_of(self, x: AElem) -> int:
        return hash(Fraction(x.num, x.den))

    def random_element(
        self,
        rng: random.Random,
        *,
        max_valuation: int = 0,
        unit: bool = False,
    ) -> AElem:
        num = rng.randint(1, 60)
        while num % self.prime == 0:
            num = rng.randint(1, 60)
        if rng.random() < 0.5:  # noqa: PLR2004
            num = -num
        den = 1
        if rng.random() < 0.2:  # noqa: PLR2004
            den = rng.randint(1, 12)
            while den % self.prime == 0:
                den = rng.randint(1, 12)
        elem = self.element(num, den)
        if unit:
            return elem
        return self.shift(elem, rng.randint(0, max_valuation))


def valuation(a: AElem) -> int | float:
    """Get the t-adic valuation of an element.

    Args:
        a (AElem): The element.

    Returns:
        int | float: v with a = t^v * unit, or `math.inf` for zero.

    """
    if a.is_zero:
        return INFINITY
    return a.ring.num_valuation(a)


@beartype
def unit_part_split(a: AElem) -> tuple[int, AElem]:
    """Split a nonzero element as t^n * u with u a unit.

    Args:
        a (AElem): Nonzero element.

    Returns:
        tuple[int, AElem]: (n, u).

    Raises:
        DCZeroInputError: If a is zero.

    """
    if a.is_zero:
        msg = _("Zero has no unit part.")
        raise DCZeroInputError(msg)
    n = a.ring.num_valuation(a)
    return n, a.ring.unshift(a, n)


@beartype
def invert_unit(u: AElem) -> AElem:
    """Invert a unit of A exactly.

    Args:
        u (AElem): Element of valuation zero.

    Returns:
        AElem: The inverse.

    Raises:
        DCNotAUnitError: If u is not a unit.

    """
    if valuation(u) != 0:
        msg = fast_format_str(
            _("${{elem}} is not a unit of A."),
            fmt={"elem": str(u)},
        )
        raise DCNotAUnitError(msg)
    return u.ring.inverse(u)


def residue(a: AElem) -> ResidueElem:
    """Reduce an element modulo t.

    Args:
        a (AElem): The element.

    Returns:
        ResidueElem: Its image in k.

    """
    return a.ring.residue_of(a)


def divide_by_t_power(a: AElem, exponent: int) -> AElem:
    """Divide exactly by t^exponent.

    Args:
        a (AElem): The element.
        exponent (int): Non-negative exponent.

    Returns:
        AElem: a / t^exponent.

    Raises:
        DCValueError: If the division is not exact in A.

    """
    return a.ring.unshift(a, exponent)
