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

"""Module configuration."""

from __future__ import annotations

import sys
from pathlib import Path

# Application basic configurations.
APP_NAME = "dvrcert"
APP_VERSION = "0.1.0"
MINIMUM_PYTHON_VERSION = (3, 11)

# I18n configurations.
TEXT_DOMAIN = APP_NAME
DEFAULT_CHARSET = "UTF-8"

# Workspace configurations.
WORKSPACE_CONFIG_DIR = Path(f".{APP_NAME}")

# Logging configurations.
LOG_FILE = WORKSPACE_CONFIG_DIR / f"{APP_NAME}.log"
LOG_FORMAT = "[%(asctime)s] [%(name)s] [%(levelname)s] %(message)s"
LOG_TIME_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_LEVEL = "DEBUG"

# Report configurations.
REPORT_SCHEMA_VERSION = 1

# Instance defaults. The minimal-ones instance over the rationals.
DEFAULT_R_MAX = 5
DEFAULT_PRECISION = 64
DEFAULT_DEGREE_BOUND = 6
DEFAULT_MAX_LEVEL = 6
DEFAULT_TRIALS = 1000
DEFAULT_SEED = 42
DEFAULT_N_MAX = 256
DEFAULT_SLACK = 2
DEFAULT_ORACLE_SAMPLES = 1000
DEFAULT_DVR_SAMPLES = 200
DEFAULT_EQ6_SAMPLES = 100
DEFAULT_CLAIM_SAMPLES = 50

# Valuation bound for random elements handed to the DVR witness suite.
DVR_WITNESS_VALUATION_BOUND = 32

# Constants that are not configurable.
STDOUT_IS_TTY = sys.stdout.isatty()
PROGRAM_PATH = Path(sys.argv[0]).resolve()
