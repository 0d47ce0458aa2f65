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

"""The CLI kernel trigger."""

from __future__ import annotations

from typing import TYPE_CHECKING

import rich
from rich.table import Table

from dvrcert.cli.output import (
    output_line,
    output_step,
    output_warning,
    pop_level,
    push_level,
)
from dvrcert.harness.ktrigger import IKernelTrigger
from dvrcert.harness.report import CheckStatus
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _

if TYPE_CHECKING:
    from dvrcert.harness.report import CheckRecord, Report

# ruff: noqa: D102 D107
# pylint: disable=missing-function-docstring

__all__ = ["DCKTrigger"]

STATUS_STYLES = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "red",
    CheckStatus.INCONCLUSIVE: "yellow",
}


class DCKTrigger(IKernelTrigger):
    """dvrcert kernel trigger."""

    verbose: bool

    def __init__(self, *, verbose: bool = False) -> None:
        super().__init__()
        self.verbose = verbose

    def on_suite_start(self, *, suite: str, instance: str) -> None:
        output_step(
            fast_format_str(
                _("Running suite [cyan]${{suite}}[/cyan] on ${{instance}} ..."),
                fmt={"suite": suite, "instance": instance},
            ),
        )
        push_level()

    def on_check_done(self, *, record: CheckRecord) -> None:
        if record.status == CheckStatus.PASS and not self.verbose:
            return
        style = STATUS_STYLES[record.status]
        output_line(
            fast_format_str(
                "[${{style}}]${{status}}[/${{style}}] ${{name}} "
                "[dim](${{anchor}})[/dim]",
                fmt={
                    "style": style,
                    "status": record.status.value.upper(),
                    "name": record.name,
                    "anchor": record.anchor,
                },
            ),
        )
        if record.status != CheckStatus.PASS:
            for key, value in sorted(record.witness.items()):
                output_line(f"    {key}: {value}")

    def on_suite_end(self, *, suite: str, failed: int) -> None:
        pop_level()
        if failed:
            output_warning(
                fast_format_str(
                    _("Suite '${{suite}}' has ${{count}} failed checks."),
                    fmt={"suite": suite, "count": failed},
                ),
            )

    def on_report_ready(self, *, report: Report) -> None:
        table = Table(title=_("Summary"))
        table.add_column(_("Status"))
        table.add_column(_("Checks"), justify="right")
        summary = report.summary()
        for status in CheckStatus:
            style = STATUS_STYLES[status]
            table.add_row(
                f"[{style}]{status.value}[/{style}]",
                str(summary[status.value]),
            )
        table.add_row(_("total"), str(summary["total"]))
        rich.print(table)

    def on_warning(self, *, message: str) -> None:
        output_warning(message)
