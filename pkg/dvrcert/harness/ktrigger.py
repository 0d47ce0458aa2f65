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

"""dvrcert kernel trigger.

Kernel trigger is called when the suite runner does something. It lets the
user interface report progress without the kernel knowing about it.
"""

from __future__ import annotations

from collections.abc import Callable
from functools import partial
from typing import TYPE_CHECKING, Any

from dvrcert.lib.exceptions import DCValueError
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    from dvrcert.harness.report import CheckRecord, Report

__all__ = [
    "IKernelTrigger",
    "bind_ktrigger_interface",
    "call_ktrigger",
    "unbind_ktrigger_interface",
]


def _null_trigger(
    name: str,
    *args: Any,  # noqa: ANN401
    **kwargs: Any,  # noqa: ANN401
) -> None:
    logger.debug(
        "Not implemented KTrigger '%s' called(%s, %s).",
        name,
        repr(args),
        repr(kwargs),
    )


class IKernelTrigger:
    """Kernel trigger interface."""

    def on_suite_start(self, *, suite: str, instance: str) -> None:
        """When a suite starts.

        Args:
            suite (str): Suite name.
            instance (str): Description of the instance.

        """
        _null_trigger("on_suite_start", suite=suite, instance=instance)

    def on_check_done(self, *, record: CheckRecord) -> None:
        """When a check has a verdict.

        Args:
            record (CheckRecord): The record.

        """
        _null_trigger("on_check_done", record=record)

    def on_suite_end(self, *, suite: str, failed: int) -> None:
        """When a suite finishes.

        Args:
            suite (str): Suite name.
            failed (int): Number of failed checks.

        """
        _null_trigger("on_suite_end", suite=suite, failed=failed)

    def on_report_ready(self, *, report: Report) -> None:
        """When the whole run is done.

        Args:
            report (Report): The report.

        """
        _null_trigger("on_report_ready", report=report)

    def on_warning(self, *, message: str) -> None:
        """When a warning is raised.

        Args:
            message (str): Warning message.

        """
        _null_trigger("on_warning", message=message)


# KTrigger instances.
ktriggers: dict[str, IKernelTrigger] = {}


def bind_ktrigger_interface(kid: str, instance: IKernelTrigger) -> None:
    """Bind a KTrigger instance with an id.

    Args:
        kid (str): KTrigger's id. It MUST be unique.
        instance (IKernelTrigger): KTrigger instance.

    Raises:
        DCValueError: If the id already exists.

    """
    if kid in ktriggers:
        raise DCValueError(
            fast_format_str(
                _("Kernel trigger id '${{name}}' already exists."),
                fmt={"name": kid},
            ),
        )
    ktriggers[kid] = instance
    logger.debug("Bind kernel trigger '%s' to '%s'.", kid, repr(instance))


def unbind_ktrigger_interface(kid: str) -> None:
    """Remove a KTrigger instance.

    Args:
        kid (str): KTrigger's id.

    """
    ktriggers.pop(kid, None)


def call_ktrigger(
    name: str | Callable[..., None],
    **kwargs: Any,  # noqa: ANN401
) -> None:
    """Call a KTrigger.

    Args:
        name (str | Callable): KTrigger's name.
        **kwargs (Any): Keyword arguments.

    """
    if callable(name):
        name = name.__name__
    for instance in ktriggers.values():
        getattr(instance, name, partial(_null_trigger, name))(**kwargs)
