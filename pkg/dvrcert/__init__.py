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

"""Exact certificates for subrings of the completion of a DVR."""

import sys

from dvrcert.config import MINIMUM_PYTHON_VERSION

if sys.version_info < MINIMUM_PYTHON_VERSION:
    sys.exit(f"Python {MINIMUM_PYTHON_VERSION} or newer is required.")
