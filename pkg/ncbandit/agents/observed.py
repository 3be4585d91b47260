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

"""TS over the factored model: rewards by implemented action, compliance by proposal."""

import numpy as np

from ..helpers.samplers import BetaParams, sample_beta, sample_dirichlet
from .base import BaseAgent

__all__ = ('ObservedAgent', )


class ObservedAgent(BaseAgent):
    """TS-Obs keeps a Beta bank over implemented actions and a Dirichlet per proposal.

    A proposal is scored by Σₐ π̃_z[a]·μ̃ₐ, with μ̃ and π̃ drawn from the two
    banks of the current context.
    """

    kind = 'ts-obs'
    observes_compliance = True

    def _standup_banks(self):
        shape = (self.num_contexts, self.num_arms)
        self.success = np.full(shape, float(self.prior.alpha_success))
        self.failure = np.full(shape, float(self.prior.alpha_failure))
        self.concentration = np.full(
            (self.num_contexts, self.num_arms, self.num_arms), float(self.prior.beta),
        )

    def _propose(self, rng, x):
        mu = sample_beta(rng, BetaParams(self.success[x], self.failure[x]))
        pi = sample_dirichlet(rng, self.concentration[x])
        return self.argmax_random_ties(rng, pi.dot(mu))

    def _observe(self, x, z, a, r, rng):
        self.observe_obs(x, z, a, r)

    def observe_obs(self, x, z, a, r):
        if r:
            self.success[x, a] += 1.0
        else:
            self.failure[x, a] += 1.0
        self.concentration[x, z, a] += 1.0
