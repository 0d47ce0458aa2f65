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

"""The subring C = A[t(z_0 - a_0), (z_i - a_i)^2] of B.

At level s an element of C is written in the two-track normal form

    Σ c_b y_s^b + Σ d_b w_s y_s^b,
    y_s = (z_s - a_s)^2,  w_s = t^{n_s+1} (z_s - a_s).

In the variable u = z_s - a_s these words are the monomials u^{2b} and
t^{n_s+1} u^{2b+1}, so the form is unique and membership of a level-s
element of B is a divisibility test on its odd u-coefficients.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from dvrcert.algebra.base_ring import AElem, ResidueElem, residue, valuation
from dvrcert.algebra.ring_b import (
    BElem,
    coerce_up,
    from_u_coefficients,
    u_coefficients,
)
from dvrcert.lib.exceptions import (
    DCLevelOutOfRangeError,
    DCValueError,
)
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    from dvrcert.algebra.construction import ConstructionParams

__all__ = [
    "CElem",
    "LevelFailure",
    "Member",
    "NotMember",
    "c_add",
    "c_membership",
    "c_mul",
    "c_neg",
    "c_sub",
    "coerce_c_up",
    "coerce_c_to",
    "eval_c",
    "from_b",
    "in_M",
    "to_b",
]


def _clean(words: Mapping[int, AElem]) -> dict[int, AElem]:
    return {b: v for b, v in sorted(words.items()) if not v.is_zero}


def _accumulate(words: dict[int, AElem], b: int, value: AElem) -> None:
    if value.is_zero:
        return
    old = words.get(b)
    words[b] = value if old is None else old + value


class CElem:
    """An element of C in two-track normal form at level s."""

    __slots__ = ("c", "d", "level", "params")

    params: ConstructionParams
    level: int
    c: dict[int, AElem]
    d: dict[int, AElem]

    def __init__(
        self,
        params: ConstructionParams,
        level: int,
        c: Mapping[int, AElem] | None = None,
        d: Mapping[int, AElem] | None = None,
    ) -> None:
        """Build an element from its word coefficients.

        Args:
            params (ConstructionParams): Construction data.
            level (int): The level s.
            c (Mapping[int, AElem] | None): b -> coefficient of y_s^b.
            d (Mapping[int, AElem] | None): b -> coefficient of w_s y_s^b.

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
        self.c = _clean(c or {})
        self.d = _clean(d or {})

    @classmethod
    def constant(
        cls,
        params: ConstructionParams,
        value: AElem | int,
        level: int = 0,
    ) -> CElem:
        """Embed an element of A.

        Args:
            params (ConstructionParams): Construction data.
            value (AElem | int): The constant.
            level (int): Level of the result.

        Returns:
            CElem: The constant.

        """
        return cls(params, level, {0: params.base(value)})

    @classmethod
    def y(cls, params: ConstructionParams, i: int) -> CElem:
        """Get y_i = (z_i - a_i)^2 at level i.

        Args:
            params (ConstructionParams): Construction data.
            i (int): Index.

        Returns:
            CElem: y_i.

        """
        return cls(params, i, {1: params.base.one})

    @classmethod
    def w(cls, params: ConstructionParams, i: int) -> CElem:
        """Get w_i = t^{n_i+1}(z_i - a_i) at level i.

        Args:
            params (ConstructionParams): Construction data.
            i (int): Index.

        Returns:
            CElem: w_i.

        """
        return cls(params, i, d={0: params.base.one})

    @property
    def is_zero(self) -> bool:
        """Whether every coefficient vanishes."""
        return not self.c and not self.d

    def constant_term(self) -> AElem:
        """Get c_0.

        Returns:
            AElem: Coefficient of the word 1.

        """
        return self.c.get(0, self.params.base.zero)

    def bare_w_term(self) -> AElem:
        """Get d_0.

        Returns:
            AElem: Coefficient of the word w_s.

        """
        return self.d.get(0, self.params.base.zero)

    def scale(self, value: AElem | int) -> CElem:
        """Multiply by an element of A.

        Args:
            value (AElem | int): The factor.

        Returns:
            CElem: The product.

        """
        factor = self.params.base(value)
        return CElem(
            self.params,
            self.level,
            {b: v * factor for b, v in self.c.items()},
            {b: v * factor for b, v in self.d.items()},
        )

    def shift(self, exponent: int) -> CElem:
        """Multiply by t^exponent.

        Args:
            exponent (int): Non-negative exponent.

        Returns:
            CElem: The product.

        """
        return self.scale(self.params.base.t_power(exponent))

    def unshift(self, exponent: int) -> CElem:
        """Divide every coefficient by t^exponent.

        Args:
            exponent (int): Non-negative exponent.

        Returns:
            CElem: The quotient.

        Raises:
            DCValueError: If some coefficient is not divisible.

        """
        base = self.params.base
        return CElem(
            self.params,
            self.level,
            {b: base.unshift(v, exponent) for b, v in self.c.items()},
            {b: base.unshift(v, exponent) for b, v in self.d.items()},
        )

    def min_valuation(self, *, skip_basic: bool = False) -> int | float:
        """Get the least coefficient valuation.

        Args:
            skip_basic (bool): Ignore the words 1 and w_s.

        Returns:
            int | float: The minimum, `math.inf` if there is no coefficient.

        """
        values = [
            valuation(v)
            for b, v in self.c.items()
            if not (skip_basic and b == 0)
        ]
        values += [
            valuation(v)
            for b, v in self.d.items()
            if not (skip_basic and b == 0)
        ]
        return min(values, default=float("inf"))

    def __add__(self, other: CElem | AElem | int) -> CElem:
        return c_add(self, _lift(self, other))

    __radd__ = __add__

    def __sub__(self, other: CElem | AElem | int) -> CElem:
        return c_sub(self, _lift(self, other))

    def __rsub__(self, other: CElem | AElem | int) -> CElem:
        return c_sub(_lift(self, other), self)

    def __mul__(self, other: CElem | AElem | int) -> CElem:
        if isinstance(other, AElem | int):
            return self.scale(other)
        return c_mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> CElem:
        return c_neg(self)

    def __pow__(self, exponent: int) -> CElem:
        result = CElem.constant(self.params, 1, self.level)
        for _i in range(exponent):
            result = c_mul(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AElem | int):
            other = _lift(self, other)
        if not isinstance(other, CElem):
            return NotImplemented
        if other.params is not self.params:
            return False
        lhs, rhs = _common(self, other)
        return lhs.c == rhs.c and lhs.d == rhs.d

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        s = self.level
        terms: list[tuple[int, str, AElem]] = []
        for b, v in self.c.items():
            word = "" if b == 0 else (f"y{s}" if b == 1 else f"y{s}^{b}")
            terms.append((2 * b, word, v))
        for b, v in self.d.items():
            tail = "" if b == 0 else (f"*y{s}" if b == 1 else f"*y{s}^{b}")
            terms.append((2 * b + 1, f"w{s}{tail}", v))
        if not terms:
            return "0"
        parts = []
        for _deg, word, v in sorted(terms, key=lambda item: item[0]):
            text = str(v)
            if not word:
                parts.append(f"({text})" if " " in text else text)
            elif text == "1":
                parts.append(word)
            else:
                parts.append(f"({text})*{word}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CElem(level={self.level}, {self})"


def _lift(f: CElem, value: CElem | AElem | int) -> CElem:
    if isinstance(value, CElem):
        return value
    return CElem.constant(f.params, value, f.level)


def _images(params: ConstructionParams, s: int) -> tuple[CElem, CElem]:
    """Images of y_s and w_s at level s+1."""
    base = params.base
    a = params.a[s + 1]
    m = params.m(s + 1)
    n_next = params.n[s + 1]
    y_image = CElem(
        params,
        s + 1,
        {0: base.shift(a * a, 2 * m), 1: base.t_power(2 * m)},
        {0: base.shift(a * 2, 2 * m - n_next - 1)},
    )
    w_image = CElem(
        params,
        s + 1,
        {0: base.shift(a, n_next + 1)},
        {0: base.one},
    )
    return y_image, w_image


def coerce_c_up(f: CElem) -> CElem:
    """Rewrite f one level higher.

    Uses w_s = w_{s+1} + a_{s+1} t^{n_{s+1}+1} and, with m = m_{s+1},
    y_s = t^{2m} y_{s+1} + 2 a_{s+1} t^{2m-n_{s+1}-1} w_{s+1}
    + a_{s+1}^2 t^{2m}.

    Args:
        f (CElem): The element at level s.

    Returns:
        CElem: The same element at level s+1.

    Raises:
        DCLevelOutOfRangeError: If s is already r_max+1.

    """
    params = f.params
    if f.level >= params.top_level:
        raise DCLevelOutOfRangeError(
            fast_format_str(
                _("Cannot coerce C beyond level ${{top}}."),
                fmt={"top": params.top_level},
            ),
            level=f.level + 1,
            top_level=params.top_level,
        )
    y_image, w_image = _images(params, f.level)
    top = max([*f.c.keys(), *f.d.keys()], default=0)
    powers = [CElem.constant(params, 1, f.level + 1)]
    for _b in range(top):
        powers.append(c_mul(powers[-1], y_image))
    result = CElem(params, f.level + 1)
    for b, v in f.c.items():
        result = c_add(result, powers[b].scale(v))
    for b, v in f.d.items():
        result = c_add(result, c_mul(w_image, powers[b]).scale(v))
    return result


def coerce_c_to(f: CElem, level: int) -> CElem:
    """Rewrite f at a higher level.

    Args:
        f (CElem): The element.
        level (int): Target level, at least f.level.

    Returns:
        CElem: The same element at `level`.

    """
    if level < f.level:
        raise DCLevelOutOfRangeError(
            fast_format_str(
                _("Cannot coerce from level ${{src}} down to ${{dst}}."),
                fmt={"src": f.level, "dst": level},
            ),
            level=level,
            top_level=f.params.top_level,
        )
    while f.level < level:
        f = coerce_c_up(f)
    return f


def _common(f: CElem, g: CElem) -> tuple[CElem, CElem]:
    if f.params is not g.params:
        msg = _("Elements belong to different constructions.")
        raise DCValueError(msg)
    level = max(f.level, g.level)
    return coerce_c_to(f, level), coerce_c_to(g, level)


def c_add(f: CElem, g: CElem) -> CElem:
    """Add two elements at their common level.

    Args:
        f (CElem): First summand.
        g (CElem): Second summand.

    Returns:
        CElem: f + g.

    """
    f, g = _common(f, g)
    c = dict(f.c)
    d = dict(f.d)
    for b, v in g.c.items():
        _accumulate(c, b, v)
    for b, v in g.d.items():
        _accumulate(d, b, v)
    return CElem(f.params, f.level, c, d)


def c_neg(f: CElem) -> CElem:
    """Negate an element.

    Args:
        f (CElem): The element.

    Returns:
        CElem: -f.

    """
    return CElem(
        f.params,
        f.level,
        {b: -v for b, v in f.c.items()},
        {b: -v for b, v in f.d.items()},
    )


def c_sub(f: CElem, g: CElem) -> CElem:
    """Subtract two elements.

    Args:
        f (CElem): Minuend.
        g (CElem): Subtrahend.

    Returns:
        CElem: f - g.

    """
    return c_add(f, c_neg(g))


def c_mul(f: CElem, g: CElem) -> CElem:
    """Multiply two elements at their common level.

    Uses w_s^2 = t^{2n_s+2} y_s.

    Args:
        f (CElem): First factor.
        g (CElem): Second factor.

    Returns:
        CElem: f * g.

    """
    f, g = _common(f, g)
    params = f.params
    w_square = params.base.t_power(2 * params.n[f.level] + 2)
    c: dict[int, AElem] = {}
    d: dict[int, AElem] = {}
    for b1, x in f.c.items():
        for b2, v in g.c.items():
            _accumulate(c, b1 + b2, x * v)
        for b2, v in g.d.items():
            _accumulate(d, b1 + b2, x * v)
    for b1, x in f.d.items():
        for b2, v in g.c.items():
            _accumulate(d, b1 + b2, x * v)
        for b2, v in g.d.items():
            _accumulate(c, b1 + b2 + 1, x * v * w_square)
    return CElem(params, f.level, c, d)


def to_b(f: CElem) -> BElem:
    """Expand f as an element of B at the same level.

    Args:
        f (CElem): The element.

    Returns:
        BElem: Its polynomial in z_s.

    """
    params = f.params
    base = params.base
    degree = max([2 * b for b in f.c] + [2 * b + 1 for b in f.d], default=0)
    coeffs = [base.zero] * (degree + 1)
    for b, v in f.c.items():
        coeffs[2 * b] = v
    for b, v in f.d.items():
        coeffs[2 * b + 1] = base.shift(v, params.n[f.level] + 1)
    return from_u_coefficients(params, f.level, coeffs)


@dataclass(frozen=True)
class LevelFailure:
    """Odd u-coefficient that is not divisible enough at one level."""

    level: int
    degree: int
    valuation: int | float
    required: int


def _split_at_level(g: BElem) -> CElem | LevelFailure:
    params = g.params
    s = g.level
    base = params.base
    required = params.n[s] + 1
    c: dict[int, AElem] = {}
    d: dict[int, AElem] = {}
    failure: LevelFailure | None = None
    for j, q in enumerate(u_coefficients(g)):
        if q.is_zero:
            continue
        if j % 2 == 0:
            c[j // 2] = q
            continue
        v = valuation(q)
        if v < required:
            failure = LevelFailure(s, j, v, required)
            continue
        d[j // 2] = base.unshift(q, required)
    if failure is not None:
        return failure
    return CElem(params, s, c, d)


def from_b(g: BElem) -> CElem:
    """Read off the normal form of g at its own level.

    Args:
        g (BElem): The element.

    Returns:
        CElem: The normal form.

    Raises:
        DCValueError: If g is not in the level-s subring of C.

    """
    split = _split_at_level(g)
    if isinstance(split, LevelFailure):
        raise DCValueError(
            fast_format_str(
                _(
                    "${{elem}} is not in C at level ${{level}}: the "
                    "coefficient of u^${{deg}} has valuation ${{val}} "
                    "< ${{req}}.",
                ),
                fmt={
                    "elem": str(g),
                    "level": split.level,
                    "deg": split.degree,
                    "val": split.valuation,
                    "req": split.required,
                },
            ),
        )
    return split


@dataclass(frozen=True)
class Member:
    """g lies in C; `elem` is its normal form at `level`."""

    level: int
    elem: CElem


@dataclass(frozen=True)
class NotMember:
    """g is not in the level-s subring for any tried level."""

    levels: tuple[int, ...]
    failures: tuple[LevelFailure, ...] = field(default=())


def c_membership(g: BElem, max_level: int) -> Member | NotMember:
    """Decide membership of g in C level by level.

    Args:
        g (BElem): The element of B.
        max_level (int): Highest level to try.

    Returns:
        Member | NotMember: The first level where g lies in C, or the
            per-level failures.

    """
    failures: list[LevelFailure] = []
    levels: list[int] = []
    current = g
    top = min(max(max_level, g.level), g.params.top_level)
    for s in range(g.level, top + 1):
        current = coerce_up(current, s)
        levels.append(s)
        split = _split_at_level(current)
        if isinstance(split, CElem):
            logger.debug("Membership certified at level %d.", s)
            return Member(s, split)
        failures.append(split)
    return NotMember(tuple(levels), tuple(failures))


def eval_c(f: CElem) -> ResidueElem:
    """Evaluate at t = 0; both word families vanish.

    Args:
        f (CElem): The element.

    Returns:
        ResidueElem: residue(c_0).

    """
    return residue(f.constant_term())


def in_M(f: CElem) -> bool:  # noqa: N802
    """Check membership in the maximal ideal M = (t, t(z_0 - a_0)).

    Args:
        f (CElem): The element.

    Returns:
        bool: True if f vanishes at t = 0.

    """
    return eval_c(f) == f.params.base.residue_field.zero
