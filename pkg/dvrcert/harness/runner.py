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

"""Run configured suites and collect a report."""

from __future__ import annotations

from typing import TYPE_CHECKING

from dvrcert.harness.config_loader import ALL_SUITES, FaultKind
from dvrcert.harness.ktrigger import IKernelTrigger, call_ktrigger
from dvrcert.harness.report import CheckStatus, Report
from dvrcert.harness.suites import SUITES, SuiteContext
from dvrcert.lib.log import logger

if TYPE_CHECKING:
    from dvrcert.harness.config_loader import SuiteConfig

__all__ = ["run_suites"]


def run_suites(config: SuiteConfig, fault: FaultKind | None = None) -> Report:
    """Run the suites named by a configuration, in catalogue order.

    Args:
        config (SuiteConfig): The configuration.
        fault (FaultKind | None): Override the configured fault.

    Returns:
        Report: Every check with its verdict.

    Raises:
        DCConfigError: If the construction cannot be built.

    """
    if fault is not None:
        config = config.replace(fault=fault.value)
    instance = config.build()
    report = Report(config.as_dict())
    wanted = set(config.suites)
    description = f"{config.name}: {instance.params.base.config.describe()}"
    for name in ALL_SUITES:
        if name not in wanted:
            continue
        logger.info("Running suite '%s' on %s.", name, description)
        call_ktrigger(
            IKernelTrigger.on_suite_start,
            suite=name,
            instance=description,
        )
        records = SUITES[name](SuiteContext(config, instance))
        failed = 0
        for record in records:
            report.add(record)
            if record.status == CheckStatus.FAIL:
                failed += 1
                logger.warning(
                    "Check '%s' failed: %s",
                    record.name,
                    record.witness,
                )
            call_ktrigger(IKernelTrigger.on_check_done, record=record)
        call_ktrigger(IKernelTrigger.on_suite_end, suite=name, failed=failed)
        logger.info("Suite '%s' done, %d failed.", name, failed)
    call_ktrigger(IKernelTrigger.on_report_ready, report=report)
    return report
