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

"""Test dvrcert.harness.ktrigger module."""

from contextlib import suppress

import pytest

from dvrcert.harness.ktrigger import (
    IKernelTrigger,
    bind_ktrigger_interface,
    call_ktrigger,
    unbind_ktrigger_interface,
)
from dvrcert.lib.exceptions import DCValueError


class TestKTrigger:
    """Test KTrigger."""

    class _TestKTrigger(IKernelTrigger):
        warnings: list[str]

        def __init__(self) -> None:
            self.warnings = []

        def on_test0(self) -> None:
            """Test0: KTrigger without arguments."""

        def on_test1(self, *, suite: str, failed: int) -> None:
            """Test1: KTrigger with two arguments."""
            if suite != "ex2" or failed != 0:
                raise AssertionError

        def on_test2(self) -> None:
            """Test2: KTrigger raises an exception."""
            msg = "Test2 exception."
            raise ValueError(msg)

        def on_warning(self, *, message: str) -> None:
            """Record warnings."""
            self.warnings.append(message)

    @classmethod
    def setup_class(cls) -> None:
        """Init test suites."""
        cls.kt = cls._TestKTrigger()
        bind_ktrigger_interface("test", cls.kt)

    @classmethod
    def teardown_class(cls) -> None:
        """Remove the test KTrigger."""
        unbind_ktrigger_interface("test")

    def test_same_name_ktrigger(self) -> None:
        """Test binding a KTrigger with the same id."""
        pytest.raises(DCValueError, bind_ktrigger_interface, "test", self.kt)

    def test_call_ktrigger(self) -> None:
        """Test calling a KTrigger."""
        call_ktrigger("on_test0")
        call_ktrigger("on_test1", suite="ex2", failed=0)
        with suppress(ValueError):
            call_ktrigger("on_test2")

    def test_call_by_method(self) -> None:
        """Test calling a KTrigger through the interface method."""
        call_ktrigger(IKernelTrigger.on_warning, message="careful")
        if self.kt.warnings[-1] != "careful":
            pytest.fail(f"Warning not received: {self.kt.warnings}")

    def test_default_hooks(self) -> None:
        """Test that hooks not overridden do nothing."""
        call_ktrigger(IKernelTrigger.on_suite_start, suite="ex2", instance="Q")

    def test_non_exists_ktrigger(self) -> None:
        """Test calling a non-exists KTrigger."""
        call_ktrigger("non_exists")
