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

"""Format a message that only contains literal text and simple variables.

A simple variable is written ${{name}}. Messages are translated first and
formatted afterwards, so placeholders survive translation untouched.

e.g. "Level ${{level}} is out of range." is a simple variable expression.
"""

import re
from typing import Any

from dvrcert.lib.exceptions import DCValueError

__all__ = ["fast_format_str"]

_VARIABLE = re.compile(r"\$\{\{\s*([a-zA-Z_][a-zA-Z0-9_.-]*)\s*\}\}")


def fast_format_str(
    string: str,
    *,
    fmt: dict[str, Any] | None = None,
) -> str:
    """Format the string with variables.

    Args:
        string (str): The string to format.
        fmt (dict[str, Any] | None): The format dictionary.
            Defaults to None.

    Returns:
        str: The formatted string.

    Raises:
        DCValueError: If a placeholder has no value in `fmt`.

    """
    values = fmt or {}

    def _replace(match: re.Match[str]) -> str:
        name = match.group(1)
        if name not in values:
            msg = f"Missing value for placeholder '{name}'."
            raise DCValueError(msg)
        return str(values[name])

    return _VARIABLE.sub(_replace, string)
