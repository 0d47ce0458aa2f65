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

"""dvrcert exceptions definitions.

These exceptions describe a failure that may carry a document link or a
hint. Negative results that are part of an answer (non-membership, a
truncated valuation, an unsolvable linear system) are returned as data and
never raised.
"""

from __future__ import annotations

from typing import Any

from dvrcert.lib.l10n import _

__all__ = [
    "DCConfigError",
    "DCDimensionMismatchError",
    "DCError",
    "DCIndexOutOfRangeError",
    "DCInternalError",
    "DCLevelBudgetExceededError",
    "DCLevelOutOfRangeError",
    "DCNotAUnitError",
    "DCNotInKernelError",
    "DCNotInMError",
    "DCSyntaxError",
    "DCTypeError",
    "DCUnknownIndexError",
    "DCValuationCapExceededError",
    "DCValueError",
    "DCZeroInputError",
]


class DCError(RuntimeError):
    """dvrcert exception basic class."""

    docurl: str
    hint: str

    def __init__(
        self,
        *args: str | Exception,
        docurl: str = "",
        hint: str = "",
        **kwargs: Any,  # noqa: ANN401
    ) -> None:
        """Initialize a basic dvrcert exception.

        Args:
            *args: Positional arguments.
            docurl (str, optional): Document link url. Defaults to "".
            hint (str, optional): Exception hint. Defaults to "".
            **kwargs: Keyword arguments.

        """
        self.docurl = docurl
        self.hint = hint
        super().__init__(*args, **kwargs)


class DCValueError(DCError, ValueError):
    """dvrcert value exception."""


class DCTypeError(DCError, TypeError):
    """dvrcert type exception."""


class DCZeroInputError(DCValueError):
    """An operation that needs a nonzero element received zero."""


class DCNotAUnitError(DCValueError):
    """An element of A with positive valuation was treated as a unit."""


class DCIndexOutOfRangeError(DCValueError, IndexError):
    """A construction index beyond the stored coefficients was requested."""


class DCLevelOutOfRangeError(DCValueError):
    """A coercion would leave the configured levels 0..r_max+1."""

    def __init__(
        self,
        *args: str,
        level: int = -1,
        top_level: int = -1,
        **kwargs: Any,  # noqa: ANN401
    ) -> None:
        """Initialize a level exception.

        Args:
            *args: Positional arguments.
            level (int): The requested level.
            top_level (int): The highest level available.
            **kwargs: Keyword arguments.

        """
        kwargs.setdefault(
            "hint",
            _("Increase r_max in the configuration to reach more levels."),
        )
        super().__init__(*args, **kwargs)
        self.level = level
        self.top_level = top_level


class DCLevelBudgetExceededError(DCLevelOutOfRangeError):
    """A rewriting loop needed more levels than r_max allows."""


class DCNotInKernelError(DCValueError):
    """Division by t was requested for an element outside tB."""


class DCNotInMError(DCValueError):
    """An element outside the maximal ideal M was given."""


class DCValuationCapExceededError(DCValueError):
    """The valuation of an element is not visible below the cap."""


class DCDimensionMismatchError(DCValueError):
    """A linear system has inconsistent dimensions."""


class DCUnknownIndexError(DCValueError):
    """An expression names a generator index above r_max+1."""


class DCSyntaxError(DCValueError):
    """Expression syntax error with a character position."""

    position: int

    def __init__(
        self,
        *args: str,
        position: int = 0,
        **kwargs: Any,  # noqa: ANN401
    ) -> None:
        """Initialize a syntax exception.

        Args:
            *args: Positional arguments.
            position (int): Zero based column of the offending character.
            **kwargs: Keyword arguments.

        """
        super().__init__(*args, **kwargs)
        self.position = position


class DCConfigError(DCValueError):
    """Invalid suite configuration."""


class DCInternalError(DCError):
    """A certificate or rewriting step failed its own exact check.

    This always indicates a bug in dvrcert, never a user error.
    """
