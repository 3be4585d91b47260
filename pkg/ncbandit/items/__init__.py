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

"""``ncbandit`` domain value classes."""

from .environment import Environment, StepOutcome
from .params import ComplianceMatrix, RewardParams
from .regret_trace import RegretTrace

__all__ = (
    'ComplianceMatrix',
    'Environment',
    'RegretTrace',
    'RewardParams',
    'StepOutcome',
)
