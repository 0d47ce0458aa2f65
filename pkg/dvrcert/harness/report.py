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

"""Machine-readable suite reports."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from dvrcert.config import DEFAULT_CHARSET, REPORT_SCHEMA_VERSION
from dvrcert.lib.exceptions import DCValueError
from dvrcert.lib.fast_format_str import fast_format_str
from dvrcert.lib.l10n import _

if TYPE_CHECKING:
    from pathlib import Path

__all__ = [
    "CheckRecord",
    "CheckStatus",
    "Report",
    "report_schema_errors",
]


class CheckStatus(enum.Enum):
    """Outcome of a single check."""

    PASS = "pass"  # noqa: S105
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CheckRecord:
    """One check: what it verifies, where it comes from, and its evidence."""

    name: str
    anchor: str
    status: CheckStatus
    witness: dict[str, Any] = field(default_factory=dict)
    millis: float = 0.0

    def as_dict(self, *, timing: bool = True) -> dict[str, Any]:
        """Get the JSON form.

        Args:
            timing (bool): Keep the wall-clock field. Without it two runs
                of the same configuration serialize identically.

        Returns:
            dict[str, Any]: The record.

        """
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status.value,
            "witness": self.witness,
            "millis": round(self.millis, 3) if timing else 0.0,
        }


@dataclass
class Report:
    """Checks of one suite run, with the configuration they ran under."""

    config: dict[str, Any]
    checks: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        """Append a record.

        Args:
            record (CheckRecord): The record.

        """
        self.checks.append(record)

    def summary(self) -> dict[str, int]:
        """Count the records by status.

        Returns:
            dict[str, int]: Counts per status and the total.

        """
        counts = {status.value: 0 for status in CheckStatus}
        for record in self.checks:
            counts[record.status.value] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def failed(self) -> bool:
        """Whether any check failed."""
        return any(r.status == CheckStatus.FAIL for r in self.checks)

    @property
    def exit_code(self) -> int:
        """0 if nothing failed, 1 otherwise."""
        return 1 if self.failed else 0

    def as_dict(self, *, timing: bool = True) -> dict[str, Any]:
        """Get the JSON form, records ordered by name.

        Args:
            timing (bool): Keep wall-clock fields.

        Returns:
            dict[str, Any]: The report.

        """
        ordered = sorted(self.checks, key=lambda r: r.name)
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "config": self.config,
            "checks": [r.as_dict(timing=timing) for r in ordered],
            "summary": self.summary(),
        }

    def dumps(self, *, timing: bool = True) -> str:
        """Serialize with sorted keys.

        Args:
            timing (bool): Keep wall-clock fields.

        Returns:
            str: The JSON text.

        """
        return json.dumps(
            self.as_dict(timing=timing),
            indent=2,
            sort_keys=True,
            ensure_ascii=False,
        )

    def write(self, path: Path, *, timing: bool = True) -> None:
        """Write the report file.

        Args:
            path (Path): Destination.
            timing (bool): Keep wall-clock fields.

        Raises:
            DCValueError: If the report does not match its schema.

        """
        data = self.as_dict(timing=timing)
        errors = report_schema_errors(data)
        if errors:
            raise DCValueError("; ".join(errors))
        path.parent.mkdir(parents=True, exist_ok=True)
        text = self.dumps(timing=timing) + "\n"
        path.write_text(text, encoding=DEFAULT_CHARSET)


_CHECK_FIELDS = {
    "name": str,
    "anchor": str,
    "status": str,
    "witness": dict,
    "millis": int | float,
}


def report_schema_errors(data: object) -> list[str]:  # noqa: C901
    """Validate a report against its schema.

    Args:
        data (object): Parsed report.

    Returns:
        list[str]: Violations, empty for a valid report.

    """
    if not isinstance(data, dict):
        return [_("A report must be an object.")]
    errors: list[str] = []
    expected = {"schema_version", "config", "checks", "summary"}
    if set(data) != expected:
        errors.append(
            fast_format_str(
                _("Report keys must be ${{keys}}."),
                fmt={"keys": ", ".join(sorted(expected))},
            ),
        )
        return errors
    if data["schema_version"] != REPORT_SCHEMA_VERSION:
        errors.append(_("Unsupported schema version."))
    if not isinstance(data["config"], dict):
        errors.append(_("'config' must be an object."))
    statuses = {s.value for s in CheckStatus}
    checks = data["checks"]
    if not isinstance(checks, list):
        return [*errors, _("'checks' must be a list.")]
    for index, check in enumerate(checks):
        if not isinstance(check, dict) or set(check) != set(_CHECK_FIELDS):
            errors.append(
                fast_format_str(
                    _("Check ${{index}} has the wrong keys."),
                    fmt={"index": index},
                ),
            )
            continue
        for key, kind in _CHECK_FIELDS.items():
            if not isinstance(check[key], kind):
                errors.append(
                    fast_format_str(
                        _("Check ${{index}}: '${{key}}' has the wrong type."),
                        fmt={"index": index, "key": key},
                    ),
                )
        if check["status"] not in statuses:
            errors.append(
                fast_format_str(
                    _("Check ${{index}}: unknown status '${{status}}'."),
                    fmt={"index": index, "status": check["status"]},
                ),
            )
    summary = data["summary"]
    if not isinstance(summary, dict) or summary.get("total") != len(checks):
        errors.append(_("'summary' does not count the checks."))
    return errors
