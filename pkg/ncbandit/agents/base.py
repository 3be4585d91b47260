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

"""
Base class for bandit agents.

Every agent follows the same loop: ``propose(rng, x)`` returns the action
to request, then ``observe(x, z, r, a=None, rng=None)`` feeds back what
happened. Only agents whose ``observes_compliance`` is True are given the
implemented action ``a``.
"""

from gettext import gettext as _

import numpy as np

from ..helpers.errors import AgentStateError, ValidationError
from ..inference.variational import ConjugatePrior

__all__ = ('BaseAgent', )


class BaseAgent(object):
    """Base class for all agents."""

    kind = None
    observes_compliance = False

    def __init__(self, prior=None, label=None):
        self.prior = prior or ConjugatePrior()
        if self.prior.alpha_success <= 0 or self.prior.alpha_failure <= 0:
            raise ValidationError(_('Beta prior shapes must be > 0: {}').format(prior))
        if self.prior.beta <= 0:
            raise ValidationError(_('Dirichlet prior must be > 0: {}').format(prior))
        self.label = label or self.kind
        self.num_contexts = None
        self.num_arms = None
        self.vi_runs = 0
        self.vi_converged = 0

    def __repr__(self):
        return '{}(label={!r}, contexts={}, arms={})'.format(
            self.__class__.__name__, self.label, self.num_contexts, self.num_arms,
        )

    # ***

    def standup(self, num_contexts, num_arms):
        """Size the posterior banks for an environment and reset them to the prior."""
        if num_contexts < 1 or num_arms < 2:
            raise ValidationError(
                _('Cannot stand up an agent for {} contexts and {} arms.')
                .format(num_contexts, num_arms)
            )
        self.num_contexts = int(num_contexts)
        self.num_arms = int(num_arms)
        self.vi_runs = 0
        self.vi_converged = 0
        self._standup_banks()
        return self

    def _standup_banks(self):
        pass

    @property
    def ready(self):
        return self.num_arms is not None

    def _must_be_ready(self, rng=None, need_rng=False):
        if not self.ready:
            raise AgentStateError(
                _('The {} agent was used before standup().').format(self.label)
            )
        if need_rng and rng is None:
            raise AgentStateError(
                _('The {} agent needs a random stream.').format(self.label)
            )

    def _must_be_indices(self, x, z, a=None):
        if not (0 <= x < self.num_contexts):
            raise ValidationError(_('Context index out of range: {!r}').format(x))
        for action in (z, a):
            if action is not None and not (0 <= action < self.num_arms):
                raise ValidationError(_('Action index out of range: {!r}').format(action))

    # ***

    def propose(self, rng, x):
        self._must_be_ready(rng, need_rng=True)
        self._must_be_indices(x, 0)
        return self._propose(rng, x)

    def _propose(self, rng, x):
        raise NotImplementedError

    def observe(self, x, z, r, a=None, rng=None):
        self._must_be_ready()
        if self.observes_compliance and a is None:
            raise ValidationError(
                _('The {} agent must be told the implemented action.').format(self.label)
            )
        self._must_be_indices(x, z, a)
        if r not in (0, 1):
            raise ValidationError(_('Rewards must be 0 or 1, not: {!r}').format(r))
        self._observe(x, z, a, r, rng)

    def _observe(self, x, z, a, r, rng):
        raise NotImplementedError

    # ***

    @staticmethod
    def argmax_random_ties(rng, values):
        """Return the index of the largest value, picking uniformly among ties."""
        values = np.asarray(values)
        best = np.flatnonzero(values == values.max())
        if best.size == 1:
            return int(best[0])
        return int(best[rng.integers(best.size)])
