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

"""Argument parser for CLI."""

import argparse

from dvrcert.cli.main.commands import (
    cmd_chain,
    cmd_claim,
    cmd_decompose,
    cmd_member,
    cmd_suite,
    cmd_validate,
)
from dvrcert.cli.main.help_formatter import DCHelpFormatter
from dvrcert.cli.main.version_action import CLIVersionAction
from dvrcert.config import DEFAULT_MAX_LEVEL, DEFAULT_SEED, DEFAULT_TRIALS
from dvrcert.harness.config_loader import FaultKind
from dvrcert.lib.l10n import _

__all__ = ["get_arg_parser"]


def _add_config(parser: argparse.ArgumentParser, *, default: object) -> None:
    parser.add_argument(
        "--config",
        type=str,
        metavar="FILE",
        default=default,
        help=_("Suite configuration (JSON5, TOML or YAML)."),
    )


def _subparser(
    commands: "argparse._SubParsersAction[argparse.ArgumentParser]",
    name: str,
    help_text: str,
) -> argparse.ArgumentParser:
    parser = commands.add_parser(
        name,
        help=help_text,
        description=help_text,
        formatter_class=DCHelpFormatter,
    )
    # SUPPRESS keeps a global --config from being reset by the subcommand.
    _add_config(parser, default=argparse.SUPPRESS)
    return parser


def get_arg_parser() -> argparse.ArgumentParser:
    """Build the argument parser.

    Returns:
        argparse.ArgumentParser: The parser.

    """
    arg_parser = argparse.ArgumentParser(
        prog="dvrcert",
        description=_("Exact certificates for DVR subring constructions."),
        formatter_class=DCHelpFormatter,
        allow_abbrev=True,
    )
    arg_parser.register("action", "version", CLIVersionAction)
    arg_parser.add_argument(
        "-v",
        "--version",
        action="version",
        version="",
    )
    _add_config(arg_parser, default=None)
    # Also read from sys.argv by the log system before parsing.
    arg_parser.add_argument(
        "--log",
        action="store_true",
        help=_("Save the log to '.dvrcert/dvrcert.log'."),
    )
    arg_parser.add_argument(
        "--debug",
        action="store_true",
        help=_("Show debug log on the console."),
    )

    commands = arg_parser.add_subparsers(
        title=_("Commands"),
        dest="command",
        required=True,
    )

    validate = _subparser(commands, "validate", _("Validate a configuration."))
    validate.set_defaults(callback=cmd_validate)

    suite = _subparser(commands, "suite", _("Run the check suites."))
    suite.add_argument(
        "--out",
        type=str,
        metavar="FILE",
        default=None,
        help=_("Write the JSON report to FILE."),
    )
    suite.add_argument(
        "--fault",
        choices=[kind.value for kind in FaultKind],
        default=None,
        help=_("Inject a fault, overriding the configuration."),
    )
    suite.add_argument(
        "--no-timing",
        action="store_true",
        help=_("Zero the timing fields of the report."),
    )
    suite.add_argument(
        "--verbose",
        action="store_true",
        help=_("Show passing checks as well."),
    )
    suite.set_defaults(callback=cmd_suite)

    decompose = _subparser(
        commands,
        "decompose",
        _("Write f = X + Y w_r + t^N Z."),
    )
    decompose.add_argument(
        "expr",
        help=_("Element of C, such as `t*(z0-a0) + y1`."),
    )
    decompose.add_argument("--r", type=int, required=True, help=_("Index r."))
    decompose.add_argument(
        "--N",
        type=int,
        required=True,
        dest="N",
        help=_("Exponent N."),
    )
    decompose.set_defaults(callback=cmd_decompose)

    member = _subparser(commands, "member", _("Decide membership in C."))
    member.add_argument(
        "expr",
        help=_("Element of B, such as `t^2*(z1-a1)`."),
    )
    member.add_argument(
        "--max-level",
        type=int,
        default=DEFAULT_MAX_LEVEL,
        help=_("Highest level to try."),
    )
    member.set_defaults(callback=cmd_member)

    claim = _subparser(
        commands,
        "claim",
        _("Find g with f g = t^{2n} w, w a unit."),
    )
    claim.add_argument("expr", help=_("Nonzero element of M, such as `w0`."))
    claim.set_defaults(callback=cmd_claim)

    chain = _subparser(
        commands,
        "chain",
        _("Search relations among the z_i."),
    )
    chain.add_argument("--r", type=int, default=1, help=_("Index r."))
    chain.add_argument(
        "--trials",
        type=int,
        default=DEFAULT_TRIALS,
        help=_("Number of random candidates."),
    )
    chain.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=_("Random seed."),
    )
    chain.add_argument(
        "--adversarial",
        action="store_true",
        help=_("Mix in candidates outside the hypothesis."),
    )
    chain.set_defaults(callback=cmd_chain)

    return arg_parser
