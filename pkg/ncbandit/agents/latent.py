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

"""TS when the implemented action is never seen (TS-Lat).

Each context keeps its own buffer of (z, r) pairs. Until ``soft_start``
samples have been collected for a context, proposals there are uniform
and no posterior is fitted. From then on every observation refits the
mean-field posterior over the whole buffer, warm-started from the previous
fit unless ``vi_config.init_mode`` says otherwise.
"""

from gettext import gettext as _

import logging

import numpy as np

from ..helpers.errors import ValidationError
from ..helpers.samplers import BetaParams, sample_beta, sample_dirichlet
from ..inference import variational
from .base import BaseAgent

__all__ = ('LatentAgent', )


logger = logging.getLogger('ncbandit.log')


class LatentAgent(BaseAgent):
    kind = 'ts-lat'

    def __init__(self, soft_start=0, vi_config=None, prior=None, label=None):
        if int(soft_start) != soft_start or soft_start < 0:
            raise ValidationError(
                _('The soft start M must be an integer ≥ 0, not: {!r}').format(soft_start)
            )
        self.soft_start = int(soft_start)
        self.vi_config = variational.must_verify_vi_config(
            vi_config or variational.VIConfig()
        )
        super(LatentAgent, self).__init__(
            prior=prior,
            label=label or '{}-{}'.format(self.kind, self.soft_start),
        )

    def _standup_banks(self):
        self.proposed = [[] for _x in range(self.num_contexts)]
        self.rewards = [[] for _x in range(self.num_contexts)]
        self.states = [None] * self.num_contexts

    def counter(self, x):
        return len(self.proposed[x])

    def data(self, x):
        return variational.make_latent_data(
            self.proposed[x], self.rewards[x], self.num_arms,
        )

    # ***

    def _propose(self, rng, x):
        state = self.states[x]
        if self.counter(x) < self.soft_start or state is None:
            return rng.integers(self.num_arms)
        mu = sample_beta(rng, BetaParams(state.alpha_success, state.alpha_failure))
        pi = sample_dirichlet(rng, state.beta_prime)
        return self.argmax_random_ties(rng, pi.dot(mu))

    def _observe(self, x, z, a, r, rng):
        self.observe_lat(x, z, r, rng)

    def observe_lat(self, x, z, r, rng):
        self._must_be_ready(rng, need_rng=True)
        self.proposed[x].append(int(z))
        self.rewards[x].append(int(r))
        if self.counter(x) < self.soft_start:
            return None
        previous = self.states[x] if self.vi_config.init_mode == 'warm' else None
        state = variational.run(
            self.vi_config,
            self.data(x),
            rng,
            self.num_arms,
            prior=self.prior,
            previous=previous,
        )
        self.states[x] = state
        self.vi_runs += 1
        if state.converged:
            self.vi_converged += 1
        return state
