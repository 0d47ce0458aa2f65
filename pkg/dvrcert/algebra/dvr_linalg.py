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

"""Linear systems over the DVR A and bounded membership searches in C.

Systems are diagonalized with unimodular row and column operations, always
pivoting on an entry of minimum valuation. Solvability over A is then a
divisibility check per diagonal entry, so a negative answer is exact.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from dvrcert.algebra.base_ring import AElem, BaseRing, valuation
from dvrcert.algebra.ring_b import BElem, coerce_up, u_coefficients
from dvrcert.algebra.ring_c import CElem, coerce_c_to, from_b, to_b
from dvrcert.algebra.witnesses import Certificate
from dvrcert.lib.exceptions import (
    DCDimensionMismatchError,
    DCInternalError,
    DCLevelOutOfRangeError,
)
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

__all__ = [
    "AMatrix",
    "NoSolution",
    "NotFoundWithinBounds",
    "module_membership",
    "solve_linear",
]


@dataclass(frozen=True)
class AMatrix:
    """A dense matrix over A with optional row and column labels."""

    base: BaseRing
    rows: tuple[tuple[AElem, ...], ...]
    row_labels: tuple[str, ...] = field(default=())
    col_labels: tuple[str, ...] = field(default=())

    @classmethod
    def from_rows(
        cls,
        base: BaseRing,
        rows: Sequence[Sequence[AElem | int]],
        row_labels: Sequence[str] = (),
        col_labels: Sequence[str] = (),
    ) -> AMatrix:
        """Build a matrix.

        Args:
            base (BaseRing): Base ring.
            rows (Sequence[Sequence[AElem | int]]): Entries by row.
            row_labels (Sequence[str]): Row tags.
            col_labels (Sequence[str]): Column tags.

        Returns:
            AMatrix: The matrix.

        Raises:
            DCDimensionMismatchError: If the rows are ragged.

        """
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise DCDimensionMismatchError(_("Matrix rows differ in length."))
        return cls(
            base,
            tuple(tuple(base(v) for v in row) for row in rows),
            tuple(row_labels),
            tuple(col_labels),
        )

    @property
    def shape(self) -> tuple[int, int]:
        """(rows, columns)."""
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def apply(self, vector: Sequence[AElem]) -> list[AElem]:
        """Multiply by a column vector.

        Args:
            vector (Sequence[AElem]): The vector.

        Returns:
            list[AElem]: The product.

        """
        result = []
        for row in self.rows:
            total = self.base.zero
            for entry, value in zip(row, vector, strict=True):
                if not entry.is_zero and not value.is_zero:
                    total = total + entry * value
            result.append(total)
        return result


@dataclass(frozen=True)
class NoSolution:
    """The system has no solution over A."""

    row: int
    reason: str


def solve_linear(
    matrix: AMatrix,
    target: Sequence[AElem | int],
) -> tuple[AElem, ...] | NoSolution:
    """Solve matrix * h = target over A.

    Args:
        matrix (AMatrix): The system.
        target (Sequence[AElem | int]): Right-hand side.

    Returns:
        tuple[AElem, ...] | NoSolution: A solution, or the obstruction.

    Raises:
        DCDimensionMismatchError: If the target length is wrong.
        DCInternalError: If the solution does not recompose.

    """
    base = matrix.base
    n_rows, n_cols = matrix.shape
    if len(target) != n_rows:
        raise DCDimensionMismatchError(
            fast_format_str(
                _("Expected ${{rows}} right-hand sides, got ${{got}}."),
                fmt={"rows": n_rows, "got": len(target)},
            ),
        )
    work = [list(row) for row in matrix.rows]
    rhs = [base(v) for v in target]
    # Columns of the transform Q with h = Q h'.
    transform = [
        [base.one if i == j else base.zero for j in range(n_cols)]
        for i in range(n_cols)
    ]
    rank = 0
    for k in range(min(n_rows, n_cols)):
        best: tuple[int | float, int, int] | None = None
        for i in range(k, n_rows):
            for j in range(k, n_cols):
                v = valuation(work[i][j])
                if best is None or v < best[0]:
                    best = (v, i, j)
        if best is None or best[0] == float("inf"):
            break
        _v, pi, pj = best
        work[k], work[pi] = work[pi], work[k]
        rhs[k], rhs[pi] = rhs[pi], rhs[k]
        if pj != k:
            for row in work:
                row[k], row[pj] = row[pj], row[k]
            for row in transform:
                row[k], row[pj] = row[pj], row[k]
        pivot = work[k][k]
        pivot_val = valuation(pivot)
        for i in range(k + 1, n_rows):
            entry = work[i][k]
            if entry.is_zero:
                continue
            factor = base.unshift(entry, pivot_val) * base.inverse(
                base.unshift(pivot, pivot_val),
            )
            for j in range(k, n_cols):
                work[i][j] = work[i][j] - factor * work[k][j]
            rhs[i] = rhs[i] - factor * rhs[k]
        for j in range(k + 1, n_cols):
            entry = work[k][j]
            if entry.is_zero:
                continue
            factor = base.unshift(entry, pivot_val) * base.inverse(
                base.unshift(pivot, pivot_val),
            )
            work[k][j] = base.zero
            for row in transform:
                row[j] = row[j] - factor * row[k]
        rank = k + 1
    solution_prime = [base.zero] * n_cols
    for k in range(rank):
        pivot = work[k][k]
        if valuation(rhs[k]) < valuation(pivot):
            return NoSolution(
                k,
                fast_format_str(
                    _(
                        "Right-hand side of valuation ${{rv}} is not "
                        "divisible by the pivot of valuation ${{pv}}.",
                    ),
                    fmt={"rv": valuation(rhs[k]), "pv": valuation(pivot)},
                ),
            )
        shift = valuation(pivot)
        solution_prime[k] = base.unshift(rhs[k], shift) * base.inverse(
            base.unshift(pivot, shift),
        )
    for i in range(rank, n_rows):
        if not rhs[i].is_zero:
            return NoSolution(i, _("An equation reduces to 0 = nonzero."))
    solution = []
    for row in transform:
        total = base.zero
        for entry, value in zip(row, solution_prime, strict=True):
            if not entry.is_zero and not value.is_zero:
                total = total + entry * value
        solution.append(total)
    if matrix.apply(solution) != [base(v) for v in target]:
        raise DCInternalError(_("The solution does not recompose."))
    logger.debug(
        "solve_linear: %dx%d system of rank %d solved.",
        n_rows,
        n_cols,
        rank,
    )
    return tuple(solution)


@dataclass(frozen=True)
class NotFoundWithinBounds:
    """No certificate with multipliers below the degree bound exists.

    This says nothing about certificates of higher degree.
    """

    level: int
    degree_bound: int
    reason: str


def module_membership(
    target: BElem | CElem,
    generators: Sequence[CElem],
    level: int,
    degree_bound: int,
    slack: int = 2,
) -> Certificate | NotFoundWithinBounds:
    """Search target = Σ h_j g_j with h_j in the level-s subring of C.

    The multipliers range over the words y^b, w y^b of u-degree at most
    degree_bound + slack.

    Args:
        target (BElem | CElem): Element to express.
        generators (Sequence[CElem]): The g_j.
        level (int): The level s.
        degree_bound (int): Degree bound of the multipliers.
        slack (int): Extra degrees for top-degree cancellation.

    Returns:
        Certificate | NotFoundWithinBounds: A verified certificate, or an
            inconclusive answer.

    Raises:
        DCLevelOutOfRangeError: If an input lives above `level`.

    """
    target_c = target if isinstance(target, CElem) else None
    target_b = to_b(target) if isinstance(target, CElem) else target
    params = target_b.params
    base = params.base
    if target_b.level > level or any(g.level > level for g in generators):
        raise DCLevelOutOfRangeError(
            fast_format_str(
                _("Inputs must be representable at level ${{level}}."),
                fmt={"level": level},
            ),
            level=level,
            top_level=params.top_level,
        )
    bound = degree_bound + slack
    width = params.n[level] + 1
    columns: list[list[AElem]] = []
    labels: list[tuple[int, int, int]] = []
    for j, g in enumerate(generators):
        g_u = u_coefficients(coerce_up(to_b(g), level))
        for degree in range(bound + 1):
            factor = base.one if degree % 2 == 0 else base.t_power(width)
            columns.append([base.zero] * degree + [v * factor for v in g_u])
            labels.append((j, degree % 2, degree // 2))
    target_u = u_coefficients(coerce_up(target_b, level))
    height = max([len(col) for col in columns] + [len(target_u)], default=0)
    rows = [
        [col[i] if i < len(col) else base.zero for col in columns]
        for i in range(height)
    ]
    rhs = [
        target_u[i] if i < len(target_u) else base.zero for i in range(height)
    ]
    if not columns:
        return NotFoundWithinBounds(level, degree_bound, _("No generators."))
    matrix = AMatrix.from_rows(
        base,
        rows,
        [f"u^{i}" for i in range(height)],
        [f"g{j}:{'wy' if track else 'y'}^{b}" for j, track, b in labels],
    )
    solution = solve_linear(matrix, rhs)
    if isinstance(solution, NoSolution):
        return NotFoundWithinBounds(level, degree_bound, solution.reason)
    multipliers: list[dict[str, dict[int, AElem]]] = [
        {"c": {}, "d": {}} for _g in generators
    ]
    for (j, track, b), value in zip(labels, solution, strict=True):
        multipliers[j]["d" if track else "c"][b] = value
    terms = tuple(
        (
            CElem(params, level, words["c"], words["d"]),
            coerce_c_to(g, level),
        )
        for words, g in zip(multipliers, generators, strict=True)
    )
    if target_c is None:
        target_c = from_b(coerce_up(target_b, level))
    certificate = Certificate("module membership", target_c, terms)
    if certificate.combination() != target_b:
        raise DCInternalError(
            _("The membership certificate does not recompose."),
        )
    return certificate
