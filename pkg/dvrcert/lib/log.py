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

"""Logging of dvrcert runs.

Every module logs through the "dvrcert" logger. `--log` appends records to
`.dvrcert/dvrcert.log` and `--debug` shows them on the console. The flags
are read from `sys.argv` at import so that the first records of a run are
kept, and again from the arguments given to the CLI entry point.
"""

import logging
import sys
from collections.abc import Sequence

import rich
import rich.logging

from dvrcert.config import (
    APP_NAME,
    DEFAULT_CHARSET,
    LOG_FILE,
    LOG_FORMAT,
    LOG_LEVEL,
    LOG_TIME_FORMAT,
)

__all__ = ["attach_handlers", "dvrcert_get_logger", "logger"]

# Handler kinds already on the "dvrcert" logger.
_attached: set[str] = set()


def dvrcert_get_logger(name: str = APP_NAME) -> logging.Logger:
    """Get a logger below "dvrcert".

    Handlers sit on the "dvrcert" logger only. Child loggers such as
    "dvrcert.harness" reach them through propagation.

    Args:
        name (str, optional): Dotted logger name. Defaults to APP_NAME.

    Returns:
        logging.Logger: The logger.

    """
    dc_logger = logging.getLogger(name)
    dc_logger.setLevel(LOG_LEVEL)
    return dc_logger


def attach_handlers(*, log_file: bool = False, debug: bool = False) -> None:
    """Attach the handlers selected on the command line.

    A handler kind is attached once, however often this is called.

    Args:
        log_file (bool): Append records to the workspace log file.
        debug (bool): Show records on the console.

    """
    root = logging.getLogger(APP_NAME)
    if log_file and "file" not in _attached:
        LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(LOG_FILE, encoding=DEFAULT_CHARSET)
        handler.setLevel(LOG_LEVEL)
        handler.setFormatter(
            logging.Formatter(LOG_FORMAT, datefmt=LOG_TIME_FORMAT),
        )
        root.addHandler(handler)
        _attached.add("file")
    if debug and "console" not in _attached:
        root.addHandler(
            rich.logging.RichHandler(
                level=LOG_LEVEL,
                console=rich.get_console(),
                show_path=False,
            ),
        )
        _attached.add("console")


def _attach_from_argv(argv: Sequence[str]) -> None:
    logging.getLogger(APP_NAME).addHandler(logging.NullHandler())
    # Don't use argparse here.
    attach_handlers(log_file="--log" in argv, debug="--debug" in argv)


_attach_from_argv(sys.argv)

logger = dvrcert_get_logger()
