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

"""Beta-Bernoulli Thompson sampling over proposed actions."""

import numpy as np

from ..helpers.samplers import BetaParams, sample_beta
from .base import BaseAgent

__all__ = (
    'CheckAgent',
    'ThompsonAgent',
)


class ThompsonAgent(BaseAgent):
    """Standard TS: treats the proposed action as if it were implemented."""

    kind = 'ts'

    def _standup_banks(self):
        shape = (self.num_contexts, self.num_arms)
        self.success = np.full(shape, float(self.prior.alpha_success))
        self.failure = np.full(shape, float(self.prior.alpha_failure))

    def posterior(self, x):
        return BetaParams(self.success[x], self.failure[x])

    def _propose(self, rng, x):
        return self.argmax_random_ties(rng, sample_beta(rng, self.posterior(x)))

    def _observe(self, x, z, a, r, rng):
        self.observe_ts(x, z, r)

    def observe_ts(self, x, z, r):
        if r:
            self.success[x, z] += 1.0
        else:
            self.failure[x, z] += 1.0


class CheckAgent(ThompsonAgent):
    """TS that only learns from steps where the proposal was carried out."""

    kind = 'ts-check'
    observes_compliance = True

    def _observe(self, x, z, a, r, rng):
        self.observe_check(x, z, a, r)

    def observe_check(self, x, z, a, r):
        if z == a:
            self.observe_ts(x, z, r)
