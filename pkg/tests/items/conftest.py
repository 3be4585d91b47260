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

"""Fixtures needed to test item classes."""

import pytest

from ncbandit.items.regret_trace import RegretTrace


@pytest.fixture
def regret_trace():
    """A five-step trace with nothing accumulated yet."""
    return RegretTrace(5, agent='ts', replication=2, seed=3, label='p=0.00')


@pytest.fixture(params=(
    # Rows rounded to three decimals, as published.
    ((0.333, 0.333, 0.333), ),
    ((0.5, 0.501), ),
    ((0.995, 0.0), ),
))
def near_stochastic_rows(request):
    return request.param
