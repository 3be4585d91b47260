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

"""Reference policies that do not learn."""

from .base import BaseAgent

__all__ = (
    'OracleAgent',
    'UniformAgent',
)


class UniformAgent(BaseAgent):
    """Uniform exploration, the trial-design baseline for excess successes."""

    kind = 'uniform'

    def _propose(self, rng, x):
        return rng.integers(self.num_arms)

    def _observe(self, x, z, a, r, rng):
        pass


class OracleAgent(BaseAgent):
    """Always proposes the best action of the true environment."""

    kind = 'oracle'

    def __init__(self, environment, prior=None, label=None):
        super(OracleAgent, self).__init__(prior=prior, label=label)
        self.environment = environment

    def _propose(self, rng, x):
        return self.environment.optimal_proposal(x).proposal

    def _observe(self, x, z, a, r, rng):
        pass
