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

"""Fixtures needed to test helper submodule."""

import os

import pytest

from ncbandit.helpers.app_dirs import NCBanditAppDirs


@pytest.fixture
def appdirs(mocker, tmpdir):
    """Provide a user data directory inside a tmpdir."""
    data_dir = os.path.join(tmpdir.strpath, 'data', 'ncbandit')
    mocker.patch('appdirs.user_data_dir', return_value=data_dir)
    app_dirs = NCBanditAppDirs('ncbandit')
    yield app_dirs
    app_dirs.create = False
