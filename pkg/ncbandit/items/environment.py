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

"""The noncompliant Bernoulli bandit environment and its regret accounting."""

from gettext import gettext as _

from collections import namedtuple

import numpy as np

from ..helpers.errors import ValidationError
from ..helpers.samplers import sample_bernoulli, sample_categorical
from ..special.functions import check_simplex
from .item_base import BaseItem
from .params import ComplianceMatrix, RewardParams

__all__ = (
    'Environment',
    'StepOutcome',
)


StepOutcome = namedtuple(
    'StepOutcome', ('context', 'proposed', 'implemented', 'reward'),
)

OptimalProposal = namedtuple('OptimalProposal', ('proposal', 'value'))


class Environment(BaseItem):
    """Contexts x ~ p(x), implemented a ~ Π[x][z], and reward r ~ Bern(μ[x][a]).

    The environment is immutable once built. The observable reward of a
    proposal, μ′ = Π·μ per context, is computed once and shared by every
    regret query.
    """

    def __init__(self, reward, compliance, context_probs=None, label=''):
        super(Environment, self).__init__(label)
        if not isinstance(reward, RewardParams):
            reward = RewardParams(reward)
        if not isinstance(compliance, ComplianceMatrix):
            compliance = ComplianceMatrix(compliance)
        if (
            reward.num_contexts != compliance.num_contexts
            or reward.num_arms != compliance.num_arms
        ):
            raise ValidationError(
                _('Reward shape {} does not match compliance shape {}.')
                .format(reward.mu.shape, compliance.pi.shape)
            )
        if context_probs is None:
            context_probs = np.full(reward.num_contexts, 1.0 / reward.num_contexts)
        context_probs = check_simplex(context_probs, 'context_probs')
        if context_probs.size != reward.num_contexts:
            raise ValidationError(
                _('Expected {} context probabilities, not {}.')
                .format(reward.num_contexts, context_probs.size)
            )
        self.reward = reward
        self.compliance = compliance
        self.context_probs = context_probs.copy()
        self.context_probs.setflags(write=False)
        self._observable = np.einsum('xza,xa->xz', compliance.pi, reward.mu)
        self._observable.setflags(write=False)
        # Gaps are max minus entry, which is exactly ≥ 0 in floating point.
        self._gaps = self._observable.max(axis=1, keepdims=True) - self._observable
        self._gaps.setflags(write=False)

    @classmethod
    def from_rows(cls, mu, pi, context_probs=None, label=''):
        """Build from nested lists, renormalizing near-stochastic Π rows."""
        return cls(RewardParams(mu), ComplianceMatrix(pi), context_probs, label)

    def __eq__(self, other):
        return (
            isinstance(other, Environment)
            and self.label == other.label
            and self.reward == other.reward
            and self.compliance == other.compliance
            and np.array_equal(self.context_probs, other.context_probs)
        )

    def __hash__(self):
        return hash((self.label, self.reward.mu.tobytes(), self.compliance.pi.tobytes()))

    # ***

    @property
    def num_contexts(self):
        return self.reward.num_contexts

    @property
    def num_arms(self):
        return self.reward.num_arms

    def _must_be_context(self, x):
        if not (0 <= x < self.num_contexts):
            raise ValidationError(_('Context index out of range: {!r}').format(x))

    def _must_be_action(self, z):
        if not (0 <= z < self.num_arms):
            raise ValidationError(_('Action index out of range: {!r}').format(z))

    # ***

    def observable_rewards(self):
        """Return μ′ = Π·μ for every context, shape [contexts × K]."""
        return self._observable

    def expected_reward(self, x, z):
        self._must_be_context(x)
        self._must_be_action(z)
        return float(self._observable[x, z])

    def optimal_proposal(self, x):
        """Return the best proposal for context ``x``; ties go to the lowest index."""
        self._must_be_context(x)
        z_star = int(np.argmax(self._observable[x]))
        return OptimalProposal(z_star, float(self._observable[x, z_star]))

    def instantaneous_regret(self, x, z):
        self._must_be_context(x)
        self._must_be_action(z)
        return float(self._gaps[x, z])

    def uniform_policy_regret(self, horizon):
        """Return the expected cumulative regret of proposing uniformly at random."""
        return float(horizon * self.context_probs.dot(self._gaps.mean(axis=1)))

    # ***

    def sample_context(self, rng):
        return sample_categorical(rng, self.context_probs)

    def step_with_context(self, rng, x, z):
        self._must_be_context(x)
        self._must_be_action(z)
        implemented = sample_categorical(rng, self.compliance.pi[x, z])
        reward = sample_bernoulli(rng, self.reward.mu[x, implemented])
        return StepOutcome(x, z, implemented, reward)

    def step(self, rng, z):
        return self.step_with_context(rng, self.sample_context(rng), z)
