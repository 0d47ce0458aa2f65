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

"""Would-be finiteness relations and why none of them holds.

A relation f_r (z_r - a_r) = Σ_{i<r} f_i (z_i - a_i) with f_i in C and
f_r outside M is turned into a polynomial F in z = z_0 over A by
multiplying with a power of t and using t^{n_s} z_s = z - Σ_{j<s} a_j t^{n_j}.
F is nonzero modulo t whenever f_r is, so the relation would make z
algebraic over A. The search below samples candidates and checks that the
residual never vanishes, and that F(z) is visibly nonzero in the series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from dvrcert.algebra.base_ring import AElem, ResidueElem, residue, valuation
from dvrcert.algebra.ring_b import BElem, compose_linear, poly_add, poly_mul
from dvrcert.algebra.ring_c import CElem, in_M, to_b
from dvrcert.algebra.sampling import make_rng, random_candidate
from dvrcert.algebra.series import (
    TruncSeries,
    from_aelem,
    ts_add,
    ts_mul,
    val_lower_bound,
)
from dvrcert.lib.exceptions import DCInternalError, DCValueError
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from dvrcert.algebra.base_ring import BaseRing
    from dvrcert.algebra.construction import ConstructionParams, ZSeriesTable

__all__ = [
    "CertifiedNonzero",
    "ChainSearchReport",
    "Exhausted",
    "Inconclusive",
    "PolyOverA",
    "RelationCandidate",
    "TrialRecord",
    "candidate_from",
    "f_nonzero_in_series",
    "nontriviality_check",
    "relation_residual",
    "strict_chain_search",
    "to_polynomial_in_z",
]


@dataclass(frozen=True)
class RelationCandidate:
    """Coefficients f_0..f_r of a would-be relation."""

    r: int
    f: tuple[CElem, ...]

    def __post_init__(self) -> None:
        """Check the length of the coefficient tuple.

        Raises:
            DCValueError: If there are not r+1 coefficients.

        """
        if len(self.f) != self.r + 1:
            raise DCValueError(
                fast_format_str(
                    _("A relation of length ${{r}} needs ${{k}} coefficients."),
                    fmt={"r": self.r, "k": self.r + 1},
                ),
            )

    @property
    def params(self) -> ConstructionParams:
        """The construction data of the coefficients."""
        return self.f[0].params

    @property
    def in_hypothesis(self) -> bool:
        """Whether f_r lies outside M."""
        return not in_M(self.f[self.r])


class PolyOverA:
    """A polynomial in one variable z over A."""

    __slots__ = ("base", "coeffs")

    base: BaseRing
    coeffs: tuple[AElem, ...]

    def __init__(self, base: BaseRing, coeffs: Iterable[AElem]) -> None:
        """Build a polynomial, dropping zero top coefficients.

        Args:
            base (BaseRing): Base ring.
            coeffs (Iterable[AElem]): Coefficients in increasing degree.

        """
        items = list(coeffs)
        while items and items[-1].is_zero:
            items.pop()
        self.base = base
        self.coeffs = tuple(items)

    @property
    def is_zero(self) -> bool:
        """Whether this is the zero polynomial."""
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, -1 for zero."""
        return len(self.coeffs) - 1

    def residues(self) -> list[ResidueElem]:
        """Reduce every coefficient modulo t.

        Returns:
            list[ResidueElem]: The image in k[z], untrimmed.

        """
        return [residue(c) for c in self.coeffs]

    def evaluate(self, z: TruncSeries) -> TruncSeries:
        """Substitute a truncated series for z.

        Args:
            z (TruncSeries): The series.

        Returns:
            TruncSeries: F(z) at the precision of z.

        """
        total = from_aelem(self.base.zero, z.precision)
        for coeff in reversed(self.coeffs):
            total = ts_add(ts_mul(total, z), from_aelem(coeff, z.precision))
        return total

    def as_belem(self, params: ConstructionParams) -> BElem:
        """Read the polynomial as an element of A[z_0].

        Args:
            params (ConstructionParams): Construction data.

        Returns:
            BElem: F(z_0) at level 0.

        """
        return BElem(params, 0, self.coeffs)

    def __add__(self, other: PolyOverA) -> PolyOverA:
        return PolyOverA(self.base, poly_add(self.coeffs, other.coeffs))

    def __neg__(self) -> PolyOverA:
        return PolyOverA(self.base, [-c for c in self.coeffs])

    def __sub__(self, other: PolyOverA) -> PolyOverA:
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyOverA):
            return NotImplemented
        return self.coeffs == other.coeffs

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
            power = "z" if k == 1 else f"z^{k}"
            parts.append(power if text == "1" else f"({text})*{power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PolyOverA({self})"


def relation_residual(cand: RelationCandidate) -> BElem:
    """Get R = f_r (z_r - a_r) - Σ_{i<r} f_i (z_i - a_i).

    Args:
        cand (RelationCandidate): The candidate.

    Returns:
        BElem: R, zero exactly when the relation holds.

    """
    params = cand.params
    total = to_b(cand.f[cand.r]) * BElem.shifted_generator(params, cand.r)
    for i in range(cand.r):
        total = total - to_b(cand.f[i]) * BElem.shifted_generator(params, i)
    return total


def _clear_level(f: BElem, exponent: int) -> list[AElem]:
    # t^exponent f as a polynomial in z, exponent >= degree * n_s.
    params = f.params
    base = params.base
    n_s = params.n[f.level]
    scaled = [
        base.shift(coeff, exponent - k * n_s)
        for k, coeff in enumerate(f.coeffs)
    ]
    return compose_linear(scaled, -params.prefix_sum(f.level), base.one)


def to_polynomial_in_z(
    cand: RelationCandidate,
    residual: BElem | None = None,
) -> tuple[PolyOverA, int]:
    """Rewrite t^{n_r+D} R as a polynomial F in z over A.

    D >= 0 is the least exponent for which the rewriting has coefficients
    in A. D is zero when every f_i lies in the level-0 subring.

    Args:
        cand (RelationCandidate): The candidate.
        residual (BElem | None): R, when already computed.

    Returns:
        tuple[PolyOverA, int]: F and D.

    Raises:
        DCInternalError: If F(z_0) != t^{n_r+D} R in B.

    """
    params = cand.params
    base = params.base
    if residual is None:
        residual = relation_residual(cand)
    n_r = params.n[cand.r]
    if residual.is_zero:
        return PolyOverA(base, []), 0
    exponent = residual.degree * params.n[residual.level]
    raw = _clear_level(residual, exponent)
    lowest = min(valuation(c) for c in raw if not c.is_zero)
    extra = max(0, exponent - n_r - int(lowest))
    shift = n_r + extra - exponent
    if shift >= 0:
        coeffs = [base.shift(c, shift) for c in raw]
    else:
        coeffs = [base.unshift(c, -shift) for c in raw]
    poly = PolyOverA(base, coeffs)
    if poly.as_belem(params) != residual.shift(n_r + extra):
        raise DCInternalError(
            fast_format_str(
                _("Clearing denominators of ${{elem}} does not recompose."),
                fmt={"elem": str(residual)},
            ),
        )
    return poly, extra


@dataclass(frozen=True)
class CertifiedNonzero:
    """F has a coefficient of valuation zero.

    `matches_prediction` compares F mod t with the reduction of
    f_r (z - a_0), when the candidate lives at level 0.
    """

    index: int
    residue: str
    matches_prediction: bool | None


@dataclass(frozen=True)
class Inconclusive:
    """Reduction modulo t says nothing about F."""

    reason: str


def _predicted_reduction(
    cand: RelationCandidate,
) -> list[ResidueElem] | None:
    if any(f.level != 0 for f in cand.f):
        return None
    params = cand.params
    lead = to_b(cand.f[cand.r])
    factor = [-params.a[0], params.base.one]
    field = params.base.residue_field
    product = [residue(c) for c in poly_mul(lead.coeffs, factor)]
    while product and product[-1] == field.zero:
        product.pop()
    return product


def nontriviality_check(
    poly: PolyOverA,
    cand: RelationCandidate,
) -> CertifiedNonzero | Inconclusive:
    """Certify F != 0 through its reduction modulo t.

    Args:
        poly (PolyOverA): F.
        cand (RelationCandidate): The candidate F was built from.

    Returns:
        CertifiedNonzero | Inconclusive: A nonzero coefficient of F mod t,
            or no verdict.

    """
    field = poly.base.residue_field
    reduced = poly.residues()
    while reduced and reduced[-1] == field.zero:
        reduced.pop()
    if not reduced:
        if poly.is_zero:
            return Inconclusive(_("F is zero."))
        return Inconclusive(_("Every coefficient of F is divisible by t."))
    index = next(k for k, v in enumerate(reduced) if v != field.zero)
    predicted = _predicted_reduction(cand)
    return CertifiedNonzero(
        index,
        poly.base.residue_str(reduced[index]),
        None if predicted is None else predicted == reduced,
    )


@dataclass(frozen=True)
class Exhausted:
    """F(z) vanished modulo t^N for every N up to the bound."""

    n_max: int


def f_nonzero_in_series(
    poly: PolyOverA,
    n_max: int,
    table: ZSeriesTable | None = None,
    params: ConstructionParams | None = None,
) -> int | Exhausted:
    """Find the first N with F(z) != 0 mod t^N.

    The precision doubles from 2 up to `n_max`.

    Args:
        poly (PolyOverA): F.
        n_max (int): Largest precision tried.
        table (ZSeriesTable | None): Series source.
        params (ConstructionParams | None): Construction data, needed when
            no table is given.

    Returns:
        int | Exhausted: N, or `Exhausted(n_max)`.

    Raises:
        DCValueError: If neither a table nor the data is given.

    """
    if table is None:
        if params is None:
            msg = _("A series table or the construction data is required.")
            raise DCValueError(msg)
        table = params.series
    if poly.is_zero:
        return Exhausted(n_max)
    precision = 2
    while True:
        precision = min(precision, n_max)
        found = val_lower_bound(poly.evaluate(table(0, precision)))
        if isinstance(found, int):
            return found + 1
        if precision >= n_max:
            return Exhausted(n_max)
        precision *= 2


@dataclass(frozen=True)
class TrialRecord:
    """Outcome of one sampled candidate."""

    index: int
    in_hypothesis: bool
    residual_zero: bool
    extra_exponent: int
    certified: bool
    series_n: int | None


@dataclass
class ChainSearchReport:
    """Aggregate of a randomized relation search."""

    r: int
    trials: int
    seed: int
    relations_found: int = 0
    certified_nonzero: int = 0
    series_nonzero: int = 0
    out_of_hypothesis: int = 0
    prediction_mismatches: int = 0
    records: list[TrialRecord] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """Whether every in-hypothesis trial closed the contradiction."""
        counted = self.trials - self.out_of_hypothesis
        return (
            self.relations_found == 0
            and self.prediction_mismatches == 0
            and self.certified_nonzero == counted
            and self.series_nonzero == counted
        )


def strict_chain_search(  # noqa: PLR0913
    params: ConstructionParams,
    r: int,
    trials: int,
    seed: int,
    degree_bound: int = 6,
    n_max: int = 256,
    *,
    include_adversarial: bool = False,
    table: ZSeriesTable | None = None,
) -> ChainSearchReport:
    """Sample would-be relations and check that none holds.

    Args:
        params (ConstructionParams): Construction data.
        r (int): Length of the relation, r <= r_max.
        trials (int): Number of candidates.
        seed (int): Run seed.
        degree_bound (int): Bound of the u-degree of the f_i.
        n_max (int): Largest series precision for F(z).
        include_adversarial (bool): Also sample every fourth candidate
            with f_r in M. Those are counted apart.
        table (ZSeriesTable | None): Series source.

    Returns:
        ChainSearchReport: Counts and per-trial records.

    """
    params.check_index(r)
    source = table if table is not None else params.series
    report = ChainSearchReport(r, trials, seed)
    for index in range(trials):
        rng = make_rng(seed, index)
        adversarial = include_adversarial and index % 4 == 3  # noqa: PLR2004
        cand = RelationCandidate(
            r,
            random_candidate(
                params,
                r,
                rng,
                degree=degree_bound,
                adversarial=adversarial,
            ),
        )
        residual = relation_residual(cand)
        poly, extra = to_polynomial_in_z(cand, residual)
        verdict = nontriviality_check(poly, cand)
        found = f_nonzero_in_series(poly, n_max, source)
        series_n = found if isinstance(found, int) else None
        certified = isinstance(verdict, CertifiedNonzero)
        report.records.append(
            TrialRecord(
                index,
                cand.in_hypothesis,
                residual.is_zero,
                extra,
                certified,
                series_n,
            ),
        )
        if not cand.in_hypothesis:
            report.out_of_hypothesis += 1
            continue
        if residual.is_zero:
            logger.debug("Trial %d: the residual vanishes.", index)
            report.relations_found += 1
        if certified:
            report.certified_nonzero += 1
            if verdict.matches_prediction is False:
                report.prediction_mismatches += 1
        if series_n is not None:
            report.series_nonzero += 1
    logger.debug(
        "Chain search r=%d: %d trials, %d relations, %d out of hypothesis.",
        r,
        trials,
        report.relations_found,
        report.out_of_hypothesis,
    )
    return report


def candidate_from(
    params: ConstructionParams,
    coefficients: Sequence[CElem | AElem | int],
) -> RelationCandidate:
    """Build a candidate from explicit coefficients.

    Args:
        params (ConstructionParams): Construction data.
        coefficients (Sequence[CElem | AElem | int]): f_0, ..., f_r.

    Returns:
        RelationCandidate: The candidate.

    """
    f = tuple(
        c if isinstance(c, CElem) else CElem.constant(params, c)
        for c in coefficients
    )
    return RelationCandidate(len(f) - 1, f)
