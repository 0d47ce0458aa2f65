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

"""Help output of the dvrcert command line.

argparse writes its own headings and the help of `-h` in English. They are
passed through the message catalogue here, and expressions in examples are
colored like report output.
"""

import argparse
from collections.abc import Iterable
from typing import Any, ClassVar

from rich.style import StyleType
from rich_argparse import RichHelpFormatter

from dvrcert.lib.l10n import _

# ruff: noqa: D102
# pylint: disable=missing-function-docstring

__all__ = ["DCHelpFormatter"]

_ARGPARSE_HELP = {
    "show this help message and exit": _("Show this help message and exit."),
}
_HEADINGS = {
    "Usage:": _("Usage:"),
    "Positional Arguments:": _("Positional Arguments:"),
    "Options:": _("Options:"),
}


class DCHelpFormatter(RichHelpFormatter):
    """Help formatter of the dvrcert parser and its subcommands."""

    styles: ClassVar[dict[str, StyleType]] = {
        **RichHelpFormatter.styles,
        "argparse.metavar": "magenta",
        "argparse.syntax": "bold cyan",
    }

    def add_usage(
        self,
        usage: str | None,
        actions: Iterable[argparse.Action],
        groups: Iterable[Any],
        prefix: str | None = None,
    ) -> None:
        for action in actions:
            if action.help in _ARGPARSE_HELP:
                action.help = _ARGPARSE_HELP[action.help]
        super().add_usage(usage, actions, groups, prefix)

    def format_help(self) -> str:
        help_str = super().format_help()
        for english, translated in _HEADINGS.items():
            help_str = help_str.replace(english, translated)
        return help_str
