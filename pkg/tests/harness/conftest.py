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

"""Fixtures needed to test the experiment harness."""

import pytest

from ncbandit.agents import AgentSpec


@pytest.fixture
def fast_specs():
    """Agents cheap enough to replicate inside a unit test."""
    return [
        AgentSpec(kind='ts', label='ts'),
        AgentSpec(kind='ts-check', label='ts-check'),
    ]


@pytest.fixture
def small_config(experiment_config, fast_specs):
    return experiment_config._replace(agents=fast_specs, horizon=25, replications=4)
