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

"""Test dvrcert.lib.exceptions module."""

import pytest

from dvrcert.lib.exceptions import (
    DCConfigError,
    DCError,
    DCIndexOutOfRangeError,
    DCInternalError,
    DCLevelBudgetExceededError,
    DCLevelOutOfRangeError,
    DCSyntaxError,
    DCValueError,
)


class TestExceptions:
    """Test the exception hierarchy."""

    def test_hint(self) -> None:
        """Test hint and document link."""
        exc = DCError("message", hint="hint", docurl="https://example.org")
        if exc.hint != "hint" or exc.docurl != "https://example.org":
            pytest.fail("Hint and docurl should be stored.")
        if str(exc) != "message":
            pytest.fail("The message should be kept.")

    def test_hierarchy(self) -> None:
        """Test that user errors are value errors."""
        for cls in (DCConfigError, DCSyntaxError, DCLevelOutOfRangeError):
            if not issubclass(cls, ValueError):
                pytest.fail(f"{cls.__name__} should be a ValueError.")
        if not issubclass(DCIndexOutOfRangeError, IndexError):
            pytest.fail("DCIndexOutOfRangeError should be an IndexError.")
        if issubclass(DCInternalError, DCValueError):
            pytest.fail("Internal errors are not user errors.")
        with pytest.raises(DCLevelOutOfRangeError):
            raise DCLevelBudgetExceededError("budget", level=7, top_level=6)

    def test_level(self) -> None:
        """Test the level fields and the default hint."""
        exc = DCLevelOutOfRangeError("level", level=7, top_level=6)
        if exc.level != 7 or exc.top_level != 6:  # noqa: PLR2004
            pytest.fail("Levels should be stored.")
        if not exc.hint:
            pytest.fail("A level error should carry a hint.")
        custom = DCLevelOutOfRangeError("level", hint="custom")
        if custom.hint != "custom":
            pytest.fail("An explicit hint should win.")

    def test_position(self) -> None:
        """Test the syntax error position."""
        if DCSyntaxError("bad", position=4).position != 4:  # noqa: PLR2004
            pytest.fail("The position should be stored.")
