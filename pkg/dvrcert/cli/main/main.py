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

"""dvrcert CLI main entry point."""

from __future__ import annotations

import atexit
import sys

import colorama

from dvrcert.cli.main.arg_parser import get_arg_parser
from dvrcert.cli.output import show_exception
from dvrcert.config import APP_VERSION
from dvrcert.lib.exceptions import (
    DCConfigError,
    DCError,
    DCSyntaxError,
    DCUnknownIndexError,
)
from dvrcert.lib.log import attach_handlers, logger

__all__ = ["main", "run"]

# Exit code of configuration and usage errors, as argparse uses.
USAGE_ERROR = 2


def on_exit() -> None:
    """Reset terminal color."""
    sys.stdout.write(colorama.Fore.RESET)
    sys.stdout.flush()


atexit.register(on_exit)


def run(argv: list[str] | None = None) -> int:
    """Parse the arguments and run a subcommand.

    Args:
        argv (list[str] | None): Arguments without the program name.
            Defaults to `sys.argv[1:]`.

    Returns:
        int: The exit code.

    """
    args = get_arg_parser().parse_args(argv)
    attach_handlers(log_file=args.log, debug=args.debug)
    try:
        return args.callback(args)
    except (DCConfigError, DCSyntaxError, DCUnknownIndexError) as exc:
        show_exception(exc)
        return USAGE_ERROR
    except DCError as exc:
        show_exception(exc)
        return 1


def main() -> None:
    """dvrcert main entry point."""
    try:
        logger.info("dvrcert CLI version %s started.", APP_VERSION)
        colorama.init()
        sys.exit(run())
    except SystemExit as exc:
        raise exc from None  # Do not show traceback.
    except KeyboardInterrupt as exc:
        show_exception(exc)
        sys.exit(1)
    except Exception as exc:  # pylint: disable=broad-except # noqa: BLE001
        logger.critical("An unexpected error occurred.", exc_info=True)
        show_exception(exc)
        sys.exit(1)


if __name__ == "__main__":
    main()
