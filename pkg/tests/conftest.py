# This file exists within 'ncbandit'.
#
# 'ncbandit' is free software: you can redistribute it and/or modify it under the terms
# of the GNU General Public License  as  published by the Free Software Foundation,
# either version 3  of the License,  or  (at your option)  any   later    version.
#
# 'ncbandit' is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY  or  FITNESS FOR A PARTICULAR
# PURPOSE.  See  the  GNU General Public License  for  more details.
#
# You can find the GNU General Public License reprinted in the file titled 'LICENSE',
# or visit <http://www.gnu.org/licenses/>.

"""Base fixtures available to all ncbandit tests."""

import pytest

from ncbandit.control import BanditControl

# The shared fixtures live in ncbandit.tests so downstream packages can
# reuse them; conftest is already glob-imported by pytest, so import *.
# F401 'ncbandit.tests.conftest.*' imported but unused
# F403 'from ncbandit.tests.conftest import *' used; unable to detect undefined names
from ncbandit.tests.conftest import *  # noqa: F401, F403


@pytest.fixture
def controller(base_config):
    """Provide a basic controller."""
    return BanditControl(base_config)
