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

"""Normal form f = X + Y w_r + t^N Z of elements of C and its consequences.

Every f in C can be written with X, Y in A and Z in C. From it follow the
explicit "inverse" of an element of M (f g = t^{2n} w with w a unit of
C_M), the generation of C/t^N over A/t^N by 1 and t^{n_r+1} z_r, and the
fact that every nonzero prime of C_M contains t.
"""

from __future__ import annotations

from dataclasses import dataclass

from dvrcert.algebra.base_ring import AElem, unit_part_split, valuation
from dvrcert.algebra.ring_b import BElem, b_valuation
from dvrcert.algebra.ring_c import (
    CElem,
    coerce_c_to,
    coerce_c_up,
    in_M,
    to_b,
)
from dvrcert.algebra.series import AtLeast
from dvrcert.lib.exceptions import (
    DCInternalError,
    DCLevelBudgetExceededError,
    DCNotInMError,
    DCValuationCapExceededError,
    DCValueError,
    DCZeroInputError,
)
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

__all__ = [
    "ClaimResult",
    "NormalFormEq6",
    "SpecWitness",
    "claim_inverse",
    "decompose_eq6",
    "noetherian_generation",
    "spec_witness",
]


@dataclass(frozen=True)
class NormalFormEq6:
    """f = x + y * w_r + t^n * z.

    `level` is the level at which the rewriting stopped.
    """

    x: AElem
    y: AElem
    z: CElem
    r: int
    n: int
    level: int

    def recompose(self) -> BElem:
        """Get x + y w_r + t^n z in B.

        Returns:
            BElem: The recomposed element.

        """
        params = self.z.params
        w_r = to_b(CElem.w(params, self.r))
        return (
            BElem.constant(params, self.x)
            + w_r.scale(self.y)
            + to_b(self.z).shift(self.n)
        )


def decompose_eq6(f: CElem, r: int, n: int) -> NormalFormEq6:
    """Write f = X + Y w_r + t^N Z.

    The element is rewritten upwards until every word other than 1 and w
    carries a coefficient divisible by t^N. The bare-w coefficient is then
    moved back to w_r with w_r = w_s + Σ_{j=r+1}^{s} a_j t^{n_j+1}.

    Args:
        f (CElem): The element of C.
        r (int): Target index, 0 <= r <= r_max.
        n (int): Exponent N >= 1.

    Returns:
        NormalFormEq6: The decomposition, verified in B.

    Raises:
        DCValueError: If r or N is out of range.
        DCLevelBudgetExceededError: If level r_max+1 is not enough.
        DCInternalError: If the recomposition does not match.

    """
    params = f.params
    base = params.base
    if not 0 <= r <= params.r_max:
        raise DCValueError(
            fast_format_str(
                _("r must lie in 0..${{top}}, got ${{r}}."),
                fmt={"top": params.r_max, "r": r},
            ),
        )
    if n < 1:
        raise DCValueError(
            fast_format_str(_("N must be positive, got ${{n}}."), fmt={"n": n}),
        )
    g = coerce_c_to(f, max(f.level, r))
    while g.min_valuation(skip_basic=True) < n:
        if g.level >= params.top_level:
            raise DCLevelBudgetExceededError(
                fast_format_str(
                    _(
                        "Reaching t^${{n}} needs a level above "
                        "${{top}}.",
                    ),
                    fmt={"n": n, "top": params.top_level},
                ),
                level=g.level + 1,
                top_level=params.top_level,
            )
        g = coerce_c_up(g)
    s = g.level
    y = g.bare_w_term()
    transport = base.zero
    for j in range(r + 1, s + 1):
        transport = transport + base.shift(params.a[j], params.n[j] + 1)
    x = g.constant_term() - y * transport
    rest = CElem(
        params,
        s,
        {b: v for b, v in g.c.items() if b != 0},
        {b: v for b, v in g.d.items() if b != 0},
    )
    try:
        z = rest.unshift(n)
    except DCValueError as exc:
        raise DCInternalError(
            _("The rewritten remainder is not divisible by t^N."),
        ) from exc
    result = NormalFormEq6(x, y, z, r, n, s)
    if result.recompose() != to_b(f):
        raise DCInternalError(
            fast_format_str(
                _("Decomposition of ${{elem}} does not recompose."),
                fmt={"elem": str(f)},
            ),
        )
    logger.debug("decompose_eq6: r=%d N=%d stopped at level %d.", r, n, s)
    return result


@dataclass(frozen=True)
class ClaimResult:
    """f g = t^{2n} w with eval(w) != 0."""

    g: CElem
    n: int
    w: CElem
    decomposition: NormalFormEq6


def claim_inverse(f: CElem, cap: int | None = None) -> ClaimResult:
    """Find g with f g = t^{2n} w, w a unit of C_M, n the valuation of f.

    Args:
        f (CElem): Nonzero element of M.
        cap (int | None): Valuation cap. Defaults to 2*n_{r_max}+2.

    Returns:
        ClaimResult: g, n and w, verified exactly in B.

    Raises:
        DCZeroInputError: If f is zero.
        DCNotInMError: If f is not in M.
        DCValuationCapExceededError: If the valuation is not visible below
            the cap or exceeds n_{r_max}.
        DCInternalError: If the product identity fails.

    """
    params = f.params
    if f.is_zero:
        msg = _("The claim needs a nonzero element.")
        raise DCZeroInputError(msg)
    if not in_M(f):
        raise DCNotInMError(
            fast_format_str(
                _("${{elem}} does not vanish at t = 0."),
                fmt={"elem": str(f)},
            ),
        )
    limit = cap if cap is not None else 2 * params.n[params.r_max] + 2
    f_b = to_b(f)
    n = b_valuation(f_b, limit)
    if isinstance(n, AtLeast) or n > params.n[params.r_max]:
        raise DCValuationCapExceededError(
            fast_format_str(
                _("The valuation of ${{elem}} is ${{val}}, beyond n_r_max."),
                fmt={"elem": str(f), "val": str(n)},
            ),
            hint=_("Increase r_max in the configuration."),
        )
    big_n = n + 1
    r = next(i for i in range(params.r_max + 1) if params.n[i] >= n)
    nf = decompose_eq6(f, r, big_n)
    if valuation(nf.x) != n:
        raise DCInternalError(
            fast_format_str(
                _("X = ${{x}} does not have valuation ${{n}}."),
                fmt={"x": str(nf.x), "n": n},
            ),
        )
    _n, u = unit_part_split(nf.x)
    base = params.base
    w_r = CElem.w(params, r)
    tz = nf.z.shift(big_n - n)
    g = nf.z.shift(big_n) + nf.x - w_r.scale(nf.y)
    w = (tz + u) * (tz + u) - CElem.y(params, r).scale(
        base.shift(nf.y * nf.y, 2 * params.n[r] + 2 - 2 * n),
    )
    if f_b * to_b(g) != to_b(w).shift(2 * n):
        raise DCInternalError(
            fast_format_str(
                _("The product identity fails for ${{elem}}."),
                fmt={"elem": str(f)},
            ),
        )
    if in_M(w):
        raise DCInternalError(_("The cofactor w vanishes at t = 0."))
    return ClaimResult(g, n, w, nf)


def noetherian_generation(
    f: CElem,
    r: int,
    n: int,
) -> tuple[AElem, AElem, CElem]:
    """Write f = X' + Y' t^{n_r+1} z_r + t^N Z.

    Args:
        f (CElem): The element of C.
        r (int): Index.
        n (int): Exponent N.

    Returns:
        tuple[AElem, AElem, CElem]: (X', Y', Z).

    Raises:
        DCInternalError: If the identity fails in B.

    """
    params = f.params
    nf = decompose_eq6(f, r, n)
    x_prime = nf.x - nf.y * params.base.shift(params.a[r], params.n[r] + 1)
    generator = BElem.generator(params, r).shift(params.n[r] + 1)
    recomposed = (
        BElem.constant(params, x_prime)
        + generator.scale(nf.y)
        + to_b(nf.z).shift(n)
    )
    if recomposed != to_b(f):
        raise DCInternalError(_("Generation identity fails."))
    return x_prime, nf.y, nf.z


@dataclass(frozen=True)
class SpecWitness:
    """Every prime of C_M containing `f` contains t^{t_power}, hence t."""

    f: CElem
    t_power: int
    cofactor: CElem
    unit: CElem


def spec_witness(f: CElem) -> SpecWitness:
    """Show that a prime of C_M containing f contains t.

    Args:
        f (CElem): Nonzero element of M.

    Returns:
        SpecWitness: f g = t^{2n} w with w a unit of C_M.

    """
    claim = claim_inverse(f)
    return SpecWitness(f, 2 * claim.n, claim.g, claim.w)
