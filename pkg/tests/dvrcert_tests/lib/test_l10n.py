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

"""Test dvrcert.lib.l10n module."""

import sys

import pytest

from dvrcert.lib.l10n import _, locale_language


def test_l10n() -> None:
    """Test l10n."""
    sys.stdout.write(f"locale_language(): {locale_language()}\n")
    sys.stdout.flush()
    if not _("Untranslated dvrcert test message."):
        pytest.fail("Untranslated messages should be returned as is.")
