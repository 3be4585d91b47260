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

"""Seeded episodes, replications over a worker pool, presets, and checks."""

from .episode import run_episode  # noqa: F401
from .presets import run_cb_suite, run_ist, sweep_noncompliance  # noqa: F401
from .replications import ExperimentResult, run_replications  # noqa: F401
from .theorems import verify_theorems  # noqa: F401
