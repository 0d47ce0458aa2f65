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

"""Subcommand handlers of the dvrcert CLI.

Every handler takes the parsed namespace and returns the exit code.
"""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

import rich
from rich.table import Table

from dvrcert.algebra.construction import validate
from dvrcert.algebra.eq6 import claim_inverse, decompose_eq6, spec_witness
from dvrcert.algebra.nonfiniteness import strict_chain_search
from dvrcert.algebra.ring_c import Member, c_membership
from dvrcert.cli.main.ktrigger import DCKTrigger
from dvrcert.cli.output import (
    output_error,
    output_hint,
    output_line,
    output_step,
    pop_level,
    push_level,
)
from dvrcert.harness.config_loader import FaultKind, SuiteConfig
from dvrcert.harness.ktrigger import (
    bind_ktrigger_interface,
    unbind_ktrigger_interface,
)
from dvrcert.harness.runner import run_suites
from dvrcert.lib.exceptions import DCValueError
from dvrcert.lib.expr import parse_expression
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    import argparse

    from dvrcert.algebra.construction import ConstructionParams
    from dvrcert.algebra.ring_c import CElem
    from dvrcert.harness.config_loader import Instance

__all__ = [
    "cmd_chain",
    "cmd_claim",
    "cmd_decompose",
    "cmd_member",
    "cmd_suite",
    "cmd_validate",
]

KTRIGGER_ID = "dvrcert-cli"


def load_config(args: argparse.Namespace) -> SuiteConfig:
    """Load the configuration named on the command line.

    Args:
        args (argparse.Namespace): Parsed arguments.

    Returns:
        SuiteConfig: The configuration, defaults if none was given.

    """
    path: str | None = getattr(args, "config", None)
    if path is None:
        logger.debug("No configuration given, using defaults.")
        return SuiteConfig()
    return SuiteConfig.load(Path(path))


def _instance(args: argparse.Namespace) -> Instance:
    return load_config(args).build()


def _to_c(params: ConstructionParams, text: str) -> CElem:
    outcome = c_membership(parse_expression(text, params), params.top_level)
    if not isinstance(outcome, Member):
        raise DCValueError(
            fast_format_str(
                _("'${{expr}}' is not an element of C."),
                fmt={"expr": text},
            ),
            hint=_("Run 'dvrcert member' to see the failing coefficients."),
        )
    return outcome.elem


def cmd_validate(args: argparse.Namespace) -> int:
    """Check a configuration and show the construction it builds.

    Args:
        args (argparse.Namespace): Parsed arguments.

    Returns:
        int: 0 when the construction is valid.

    """
    config = load_config(args)
    output_step(
        fast_format_str(
            _("Validating configuration '${{name}}' ..."),
            fmt={"name": config.name},
        ),
    )
    params = config.build().params
    push_level()
    output_line(
        fast_format_str(
            _("Base ring: ${{base}}"),
            fmt={"base": params.base.config.describe()},
        ),
    )
    output_line(f"n = {list(params.n)}")
    output_line("a = [" + ", ".join(str(a) for a in params.a) + "]")
    pop_level()
    problems = validate(params)
    for problem in problems:
        output_error(str(problem))
    if problems:
        return 2
    output_step(_("[green]The construction is valid.[/green]"))
    return 0


def cmd_suite(args: argparse.Namespace) -> int:
    """Run the configured suites.

    Args:
        args (argparse.Namespace): Parsed arguments.

    Returns:
        int: 0 if every check passed, 1 otherwise.

    """
    config = load_config(args)
    fault = FaultKind(args.fault) if args.fault is not None else None
    bind_ktrigger_interface(KTRIGGER_ID, DCKTrigger(verbose=args.verbose))
    try:
        report = run_suites(config, fault)
    finally:
        unbind_ktrigger_interface(KTRIGGER_ID)
    if args.out is not None:
        out = Path(args.out)
        report.write(out, timing=not args.no_timing)
        output_step(
            fast_format_str(
                _("Report written to [underline]${{path}}[/underline]."),
                fmt={"path": str(out)},
            ),
        )
    return report.exit_code


def cmd_decompose(args: argparse.Namespace) -> int:
    """Print the normal form f = X + Y w_r + t^N Z.

    Args:
        args (argparse.Namespace): Parsed arguments.

    Returns:
        int: 0.

    """
    params = _instance(args).params
    nf = decompose_eq6(_to_c(params, args.expr), args.r, args.N)
    output_line(f"X = {nf.x}")
    output_line(f"Y = {nf.y}")
    output_line(f"Z = {nf.z}")
    logger.info("Decomposition stopped at level %d.", nf.level)
    return 0


def cmd_member(args: argparse.Namespace) -> int:
    """Decide membership in C up to a level.

    Args:
        args (argparse.Namespace): Parsed arguments.

    Returns:
        int: 0 for a member, 1 otherwise.

    """
    params = _instance(args).params
    outcome = c_membership(parse_expression(args.expr, params), args.max_level)
    if isinstance(outcome, Member):
        output_step(
            fast_format_str(
                _("[green]Member[/green] at level ${{level}}: ${{elem}}"),
                fmt={"level": outcome.level, "elem": str(outcome.elem)},
            ),
        )
        return 0
    output_step(_("[red]NotMember[/red]"))
    table = Table()
    table.add_column(_("Level"), justify="right")
    table.add_column(_("u-degree"), justify="right")
    table.add_column(_("Valuation"), justify="right")
    table.add_column(_("Required"), justify="right")
    for failure in outcome.failures:
        table.add_row(
            str(failure.level),
            str(failure.degree),
            str(failure.valuation),
            str(failure.required),
        )
    rich.print(table)
    return 1


def cmd_claim(args: argparse.Namespace) -> int:
    """Print g, n and w with f g = t^{2n} w.

    Args:
        args (argparse.Namespace): Parsed arguments.

    Returns:
        int: 0.

    """
    params = _instance(args).params
    f = _to_c(params, args.expr)
    result = claim_inverse(f)
    output_line(f"n = {result.n}")
    output_line(f"g = {result.g}")
    output_line(f"w = {result.w}")
    output_line(f"r = {result.decomposition.r}")
    witness = spec_witness(f)
    output_hint(
        fast_format_str(
            _("Every prime of C_M containing f contains t^${{power}}."),
            fmt={"power": witness.t_power},
        ),
    )
    return 0


def cmd_chain(args: argparse.Namespace) -> int:
    """Search relations among the z_i with seeded random coefficients.

    Args:
        args (argparse.Namespace): Parsed arguments.

    Returns:
        int: 0 if the search stayed consistent, 1 otherwise.

    """
    config = load_config(args)
    instance = config.build()
    report = strict_chain_search(
        instance.params,
        args.r,
        args.trials,
        args.seed,
        config.degree_bound,
        config.n_max,
        include_adversarial=args.adversarial,
        table=instance.table,
    )
    title = fast_format_str(_("Chain search, r = ${{r}}"), fmt={"r": args.r})
    table = Table(title=title)
    table.add_column(_("Counter"))
    table.add_column(_("Value"), justify="right")
    for label, value in (
        (_("trials"), report.trials),
        (_("relations found"), report.relations_found),
        (_("certified nonzero"), report.certified_nonzero),
        (_("nonzero in series"), report.series_nonzero),
        (_("outside hypothesis"), report.out_of_hypothesis),
        (_("prediction mismatches"), report.prediction_mismatches),
    ):
        table.add_row(label, str(value))
    rich.print(table)
    return 0 if report.consistent else 1
