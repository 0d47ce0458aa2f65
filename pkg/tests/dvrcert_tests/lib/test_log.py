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

"""Test dvrcert.lib.log module."""

import logging

import pytest

from dvrcert.config import APP_NAME
from dvrcert.lib.log import attach_handlers, dvrcert_get_logger, logger


def test_log() -> None:
    """Test the logging system."""
    logger.debug("Debug message.")
    logger.info("Info message.")
    logger.warning("Warning message.")
    logger.error("Error message.")
    logger.critical("Critical message.")
    try:
        msg = "Test exception."
        raise RuntimeError(msg)  # noqa: TRY301
    except RuntimeError:
        logger.exception("Exception message.")
        logger.warning("Warning with exception.", exc_info=True)
    logger.info("Done.")


def test_child_logger() -> None:
    """Test that module loggers propagate to the dvrcert logger."""
    child = dvrcert_get_logger(f"{APP_NAME}.harness")
    if child.parent is not logger or child.handlers:
        pytest.fail("Child loggers should only propagate.")


def test_attach_once() -> None:
    """Test that a handler kind is attached once."""
    root = logging.getLogger(APP_NAME)
    before = list(root.handlers)
    attach_handlers(debug=True)
    attach_handlers(debug=True)
    added = [h for h in root.handlers if h not in before]
    for handler in added:
        root.removeHandler(handler)
    if len(added) > 1:
        pytest.fail(f"The console handler was attached {len(added)} times.")
