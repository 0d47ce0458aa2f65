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

"""Catalogue of checks run by the suite runner.

Each suite turns one family of statements into records. A record passes
only when its certificate or identity was recomputed exactly; sampled
checks that fall outside their budget count as inconclusive, never as
passes.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from dvrcert.algebra.construction import check_defining_identities
from dvrcert.algebra.dvr_linalg import NotFoundWithinBounds, module_membership
from dvrcert.algebra.eq6 import (
    claim_inverse,
    decompose_eq6,
    noetherian_generation,
    spec_witness,
)
from dvrcert.algebra.nonfiniteness import strict_chain_search
from dvrcert.algebra.ring_b import (
    BElem,
    divide_by_t,
    eval_k,
    to_series,
    unit_normalize_b,
)
from dvrcert.algebra.ring_c import (
    CElem,
    Member,
    c_membership,
    coerce_c_to,
    eval_c,
    from_b,
    to_b,
)
from dvrcert.algebra.sampling import make_rng, random_belem, random_celem
from dvrcert.algebra.series import (
    AtLeast,
    ts_add,
    ts_mul,
    ts_sub,
    val_lower_bound,
)
from dvrcert.algebra.witnesses import (
    Certificate,
    ex2_nonmembership,
    frac_witness,
    integral_equation,
    m2_equals_tm,
    nilpotent_witness,
    trick1_holds,
    trick2_identity,
    y_in_tC_certificate,
)
from dvrcert.config import DVR_WITNESS_VALUATION_BOUND
from dvrcert.harness.config_loader import FaultKind
from dvrcert.harness.report import CheckRecord, CheckStatus
from dvrcert.lib.exceptions import (
    DCError,
    DCLevelBudgetExceededError,
    DCLevelOutOfRangeError,
    DCNotInKernelError,
    DCValuationCapExceededError,
)
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    import random

    from dvrcert.algebra.construction import ConstructionParams, ZSeriesTable
    from dvrcert.harness.config_loader import Instance, SuiteConfig

__all__ = ["SUITES", "SuiteContext"]

# Eq6 exponents N tried for every sample.
EQ6_EXPONENTS = (4, 16, 64)
# Highest index of the sampled statements.
EQ6_MAX_R = 4
EX2_MAX_R = 4
NILPOTENT_MAX_R = 3
CHAIN_MAX_R = 3
INTEGRAL_MAX_I = 5


@dataclass(frozen=True)
class SuiteContext:
    """What a suite sees of the run."""

    config: SuiteConfig
    instance: Instance

    @property
    def params(self) -> ConstructionParams:
        """The construction data."""
        return self.instance.params

    @property
    def table(self) -> ZSeriesTable:
        """The series table, possibly corrupted."""
        return self.instance.table

    @property
    def corrupt_certificates(self) -> bool:
        """Whether certificates are damaged before verification."""
        return self.config.fault == FaultKind.CORRUPT_CERTIFICATE.value

    def rng(self, salt: int) -> random.Random:
        """Get the generator of one suite.

        Args:
            salt (int): Suite-specific stream number.

        Returns:
            random.Random: A reproducible generator.

        """
        return make_rng(self.config.seed, salt)


Outcome = tuple[CheckStatus, dict[str, Any]]


def _level(params: ConstructionParams, rng: random.Random) -> int:
    return rng.randint(0, min(3, params.r_max))


def _verdict(ok: bool) -> CheckStatus:  # noqa: FBT001
    return CheckStatus.PASS if ok else CheckStatus.FAIL


def _sampled_verdict(failures: int, skipped: int) -> CheckStatus:
    if failures:
        return CheckStatus.FAIL
    if skipped:
        return CheckStatus.INCONCLUSIVE
    return CheckStatus.PASS


def _check(name: str, anchor: str, body: Callable[[], Outcome]) -> CheckRecord:
    start = time.perf_counter()
    try:
        status, witness = body()
    except DCError as exc:
        logger.debug(
            "Check %s raised %s.",
            name,
            type(exc).__name__,
            exc_info=True,
        )
        status = CheckStatus.FAIL
        witness = {"error": str(exc), "type": type(exc).__name__}
    millis = (time.perf_counter() - start) * 1000
    return CheckRecord(name, anchor, status, witness, millis)


SuiteFunc = Callable[[SuiteContext], list[CheckRecord]]

SUITES: dict[str, SuiteFunc] = {}


def suite(name: str) -> Callable[[SuiteFunc], SuiteFunc]:
    """Register a suite.

    Args:
        name (str): Suite name as used in configurations.

    Returns:
        Callable[[SuiteFunc], SuiteFunc]: The decorator.

    """

    def _register(func: SuiteFunc) -> SuiteFunc:
        SUITES[name] = func
        return func

    return _register


def _certificate_outcome(cert: Certificate, ctx: SuiteContext) -> Outcome:
    if ctx.corrupt_certificates:
        cert = cert.drop_term(0)
    return _verdict(cert.verify()), {"certificate": cert.describe()}


@suite("identities")
def _identities(ctx: SuiteContext) -> list[CheckRecord]:
    precision = ctx.config.precision
    residuals = check_defining_identities(
        ctx.table,
        ctx.params.r_max,
        precision,
    )
    records = []
    for residual in residuals:
        records.append(
            CheckRecord(
                f"identities/{residual.identity}/r={residual.r}",
                "defining identities of z_r modulo t^N",
                _verdict(residual.vanishes),
                {
                    "precision": precision,
                    "residual_valuation": residual.valuation,
                },
            ),
        )
    return records


@suite("trick-identities")
def _trick_identities(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    records = []
    for i in range(1, params.r_max + 1):
        records.append(
            _check(
                f"trick2/i={i}",
                "(z_{i-1}-a_{i-1})^2 = t^{2m_i}((z_i-a_i)^2-a_i^2)"
                " + 2a_i t^{2m_i} z_i",
                lambda i=i: (_verdict(trick2_identity(params, i)), {}),
            ),
        )
        records.append(
            _check(
                f"y-in-tC/i={i}",
                "y_{i-1} lies in tC",
                lambda i=i: _certificate_outcome(
                    y_in_tC_certificate(params, i),
                    ctx,
                ),
            ),
        )
    for r in range(params.r_max + 1):
        records.append(
            _check(
                f"trick1/r={r}",
                "t(z_0-a_0) - t^{n_r+1}(z_r-a_r) lies in A",
                lambda r=r: (_verdict(trick1_holds(params, r)), {}),
            ),
        )
    return records


def _dvr_sample(ctx: SuiteContext, rng: random.Random) -> BElem:
    params = ctx.params
    f = BElem.constant(params, 0)
    while f.is_zero:
        f = random_belem(
            params,
            rng,
            level=rng.randint(0, min(2, params.r_max)),
            degree=3,
        ).shift(rng.randint(0, 8))
    return f


@suite("dvr-witnesses")
def _dvr_witnesses(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    zero = params.base.residue_field.zero

    def body() -> Outcome:
        rng = ctx.rng(3)
        split_ok = truncated = kernel_mismatch = bad = 0
        for _index in range(ctx.config.dvr_samples):
            f = _dvr_sample(ctx, rng)
            in_kernel = eval_k(f) == zero
            try:
                divisible = divide_by_t(f).shift(1) == f
            except DCNotInKernelError:
                divisible = False
            except DCLevelOutOfRangeError:
                truncated += 1
                continue
            if in_kernel != divisible:
                kernel_mismatch += 1
            try:
                split = unit_normalize_b(f, DVR_WITNESS_VALUATION_BOUND)
            except DCLevelOutOfRangeError:
                truncated += 1
                continue
            if isinstance(split, AtLeast):
                truncated += 1
                continue
            series = to_series(f, ctx.config.precision, ctx.table)
            seen = val_lower_bound(series)
            if (
                split.unit.shift(split.n) == f
                and eval_k(split.unit) != zero
                and seen == split.n
            ):
                split_ok += 1
            else:
                bad += 1
        witness = {
            "samples": ctx.config.dvr_samples,
            "unit_splits": split_ok,
            "beyond_bound": truncated,
            "kernel_mismatches": kernel_mismatch,
            "bad_splits": bad,
        }
        return _sampled_verdict(bad + kernel_mismatch, truncated), witness

    return [_check("dvr-witnesses", "B_m is a DVR with parameter t", body)]


@suite("c-normal-form")
def _c_normal_form(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    top = min(ctx.config.max_level, params.top_level)

    def body() -> Outcome:
        rng = ctx.rng(4)
        failures = 0
        for _index in range(ctx.config.eq6_samples):
            f = random_celem(params, rng, level=_level(params, rng))
            g = to_b(f)
            outcome = c_membership(g, ctx.config.max_level)
            if not (
                isinstance(outcome, Member)
                and outcome.level == f.level
                and outcome.elem == f
            ):
                failures += 1
                continue
            for s in range(f.level, top + 1):
                if to_b(coerce_c_to(f, s)) != g:
                    failures += 1
                    break
        return _verdict(failures == 0), {
            "samples": ctx.config.eq6_samples,
            "failures": failures,
        }

    return [_check("c-normal-form", "two-track normal form of C", body)]


@suite("eq6")
def _eq6(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params

    def body() -> Outcome:
        rng = ctx.rng(5)
        done = over_budget = bad_z = generated = 0
        for index in range(ctx.config.eq6_samples):
            f = random_celem(params, rng, level=_level(params, rng))
            for r in range(min(EQ6_MAX_R, params.r_max) + 1):
                for n in EQ6_EXPONENTS:
                    try:
                        nf = decompose_eq6(f, r, n)
                    except DCLevelBudgetExceededError:
                        over_budget += 1
                        continue
                    done += 1
                    if not isinstance(
                        c_membership(to_b(nf.z), params.top_level),
                        Member,
                    ):
                        bad_z += 1
            if index < 10 and params.r_max >= 1:  # noqa: PLR2004
                try:
                    noetherian_generation(f, 1, EQ6_EXPONENTS[1])
                except DCLevelBudgetExceededError:
                    over_budget += 1
                    continue
                generated += 1
        return _sampled_verdict(bad_z, over_budget), {
            "decompositions": done,
            "over_level_budget": over_budget,
            "z_outside_c": bad_z,
            "generation_checks": generated,
        }

    return [_check("eq6", "normal form f = X + Y w_r + t^N Z", body)]


@suite("claim")
def _claim(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    zero = params.base.residue_field.zero
    cap = 2 * params.n[params.r_max] + 2

    def body() -> Outcome:
        rng = ctx.rng(6)
        ok = skipped = bad = 0
        for _index in range(ctx.config.claim_samples):
            f = random_celem(
                params,
                rng,
                level=rng.randint(0, min(2, params.r_max)),
                degree=4,
                unit_constant=False,
            )
            if f.is_zero:
                continue
            try:
                result = claim_inverse(f)
            except DCValuationCapExceededError:
                skipped += 1
                continue
            seen = val_lower_bound(to_series(to_b(f), cap, ctx.table))
            witness = spec_witness(f)
            if (
                eval_c(result.w) != zero
                and seen == result.n
                and witness.t_power == 2 * result.n
            ):
                ok += 1
            else:
                bad += 1
        return _sampled_verdict(bad, skipped), {
            "samples": ctx.config.claim_samples,
            "verified": ok,
            "valuation_beyond_cap": skipped,
            "failures": bad,
        }

    return [_check("claim", "f g = t^{2n} w with w a unit of C_M", body)]


@suite("ex1")
def _ex1(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    records = []
    forward, backward = m2_equals_tm(params)
    for index, cert in enumerate(forward + backward):
        damage = ctx.corrupt_certificates and index == 2  # noqa: PLR2004
        records.append(
            _check(
                f"m2-equals-tm/{cert.name}",
                "M^2 = tM",
                lambda cert=cert, damage=damage: (
                    _verdict((cert.drop_term(0) if damage else cert).verify()),
                    {"certificate": cert.describe()},
                ),
            ),
        )
    t = CElem.constant(params, params.base.t)
    w0 = CElem.w(params, 0)
    generators = [t * t, t * w0]

    def cross_check() -> Outcome:
        found = []
        for cert in forward:
            outcome = module_membership(
                cert.target,
                generators,
                0,
                ctx.config.degree_bound,
                ctx.config.slack,
            )
            if isinstance(outcome, NotFoundWithinBounds):
                return CheckStatus.FAIL, {"missing": cert.name}
            found.append(outcome.describe())
        negative = module_membership(
            w0,
            [t],
            0,
            ctx.config.degree_bound,
            ctx.config.slack,
        )
        return _verdict(isinstance(negative, NotFoundWithinBounds)), {
            "certificates": found,
        }

    records.append(
        _check("m2-equals-tm/linear-algebra", "M^2 = tM", cross_check),
    )
    return records


@suite("ex2")
def _ex2(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    records = []
    for r in range(min(EX2_MAX_R, params.r_max) + 1):

        def body(r: int = r) -> Outcome:
            evidence = ex2_nonmembership(params, r, ctx.config.max_level)
            table = [
                [e.level, e.coefficient_valuation, e.required_valuation]
                for e in evidence
            ]
            return _verdict(all(e.fails for e in evidence)), {"levels": table}

        records.append(
            _check(f"ex2/r={r}", "t^{n_r}(z_r - a_r) is not in C", body),
        )
    return records


@suite("nilpotent-witness")
def _nilpotent(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    records = []
    for r in range(min(NILPOTENT_MAX_R, params.r_max) + 1):

        def body(r: int = r) -> Outcome:
            witness = nilpotent_witness(params, r, ctx.config.max_level)
            ok = witness.not_in_tc and witness.e_star >= params.n[r] + 1
            return _verdict(ok), {
                "e_star": witness.e_star,
                "unshifted_e_star": witness.unshifted_e_star,
                "level": witness.e_star_level,
            }

        records.append(
            _check(
                f"nilpotent/r={r}",
                "x_r = t^{n_r+1}(z_r - a_r) is not in tC, x_r^2 is",
                body,
            ),
        )
    return records


@suite("integral-closure")
def _integral_closure(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params

    def fraction() -> Outcome:
        witness = frac_witness(params, ctx.config.precision, ctx.table)
        return _verdict(witness.series_ok and witness.exact_ok), {
            "numerator": str(witness.num),
            "denominator": str(witness.den),
        }

    records = [_check("closure/fraction", "z_0 lies in Frac C", fraction)]
    for i in range(min(INTEGRAL_MAX_I, params.top_level) + 1):

        def integral(i: int = i) -> Outcome:
            damage = ctx.corrupt_certificates and i == 1
            equation = integral_equation(params, i, corrupt=damage)
            return _verdict(equation.verify()), {
                "coefficients": [str(c) for c in equation.coefficients],
            }

        records.append(
            _check(
                f"closure/integral/i={i}",
                "z_i is integral over C",
                integral,
            ),
        )
    return records


@suite("nonfiniteness")
def _nonfiniteness(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    config = ctx.config
    records = []
    for r in range(1, min(CHAIN_MAX_R, params.r_max) + 1):

        def body(r: int = r) -> Outcome:
            report = strict_chain_search(
                params,
                r,
                config.trials,
                config.seed + r,
                config.degree_bound,
                config.n_max,
                table=ctx.table,
            )
            counted = report.trials - report.out_of_hypothesis
            failures = (
                report.relations_found
                + report.prediction_mismatches
                + counted
                - report.certified_nonzero
            )
            exhausted = counted - report.series_nonzero
            return _sampled_verdict(failures, exhausted), {
                "trials": report.trials,
                "relations_found": report.relations_found,
                "certified_nonzero": report.certified_nonzero,
                "series_nonzero": report.series_nonzero,
                "out_of_hypothesis": report.out_of_hypothesis,
            }

        records.append(
            _check(
                f"chain/r={r}",
                "no relation f_r(z_r-a_r) = Σ f_i(z_i-a_i)",
                body,
            ),
        )

    def adversarial() -> Outcome:
        report = strict_chain_search(
            params,
            1,
            8,
            config.seed,
            config.degree_bound,
            config.n_max,
            include_adversarial=True,
            table=ctx.table,
        )
        expected = report.out_of_hypothesis == 2  # noqa: PLR2004
        return _verdict(expected and report.consistent), {
            "out_of_hypothesis": report.out_of_hypothesis,
        }

    records.append(
        _check(
            "chain/adversarial",
            "candidates with f_r in M are set apart",
            adversarial,
        ),
    )
    return records


_OPS = (
    ("+", lambda f, g: f + g, ts_add),
    ("-", lambda f, g: f - g, ts_sub),
    ("*", lambda f, g: f * g, ts_mul),
)


@suite("oracle-equivalence")
def _oracle(ctx: SuiteContext) -> list[CheckRecord]:
    params = ctx.params
    precision = ctx.config.precision

    def arithmetic() -> Outcome:
        rng = ctx.rng(12)
        mismatches = 0
        for _index in range(ctx.config.oracle_samples):
            f = random_belem(params, rng, level=_level(params, rng))
            g = random_belem(params, rng, level=_level(params, rng))
            _sign, exact, series = _OPS[rng.randrange(len(_OPS))]
            lhs = to_series(exact(f, g), precision, ctx.table)
            rhs = series(
                to_series(f, precision, ctx.table),
                to_series(g, precision, ctx.table),
            )
            if lhs != rhs:
                mismatches += 1
        return _verdict(mismatches == 0), {
            "samples": ctx.config.oracle_samples,
            "mismatches": mismatches,
        }

    def round_trips() -> Outcome:
        rng = ctx.rng(13)
        failures = 0
        for _index in range(ctx.config.oracle_samples):
            f = random_celem(params, rng, level=_level(params, rng))
            if from_b(to_b(f)) != f:
                failures += 1
        return _verdict(failures == 0), {
            "samples": ctx.config.oracle_samples,
            "failures": failures,
        }

    return [
        _check(
            "oracle/arithmetic",
            "B arithmetic agrees with series",
            arithmetic,
        ),
        _check("oracle/c-round-trip", "from_b(to_b(f)) = f", round_trips),
    ]
