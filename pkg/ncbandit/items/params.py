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

"""Reward and compliance parameters of a noncompliant Bernoulli bandit."""

from gettext import gettext as _

import numpy as np

from ..helpers.errors import ValidationError

__all__ = (
    'RENORMALIZE_BAND',
    'ROW_TOLERANCE',
    'ComplianceMatrix',
    'RewardParams',
)


# Compliance rows summing inside this band are rescaled onto the simplex
# (published matrices are rounded to three decimals); anything outside is
# rejected.
RENORMALIZE_BAND = (0.99, 1.01)

ROW_TOLERANCE = 1e-6

RESCALE_THRESHOLD = 1e-12


class RewardParams(object):
    """Bernoulli success probabilities μ, one row per context."""

    def __init__(self, mu):
        mu = np.array(mu, dtype=float)
        if mu.ndim == 1:
            mu = mu[np.newaxis, :]
        if mu.ndim != 2 or mu.shape[0] < 1 or mu.shape[1] < 2:
            raise ValidationError(
                _('Reward parameters need ≥ 1 context and ≥ 2 arms, not shape {}.')
                .format(mu.shape)
            )
        if not np.all(np.isfinite(mu)) or np.any(mu < 0.0) or np.any(mu > 1.0):
            raise ValidationError(
                _('Reward probabilities must lie in [0, 1]: {}').format(mu.tolist())
            )
        mu.setflags(write=False)
        self.mu = mu

    def __repr__(self):
        return 'RewardParams(mu={})'.format(self.mu.tolist())

    def __eq__(self, other):
        return isinstance(other, RewardParams) and np.array_equal(self.mu, other.mu)

    @property
    def num_contexts(self):
        return self.mu.shape[0]

    @property
    def num_arms(self):
        return self.mu.shape[1]


class ComplianceMatrix(object):
    """Row-stochastic maps Π[x][z] from proposed to implemented actions."""

    def __init__(self, pi):
        pi = np.array(pi, dtype=float)
        if pi.ndim == 2:
            pi = pi[np.newaxis, :, :]
        if pi.ndim != 3 or pi.shape[0] < 1:
            raise ValidationError(
                _('Expected a compliance tensor [contexts × K × K], not shape {}.')
                .format(pi.shape)
            )
        if pi.shape[1] != pi.shape[2]:
            raise ValidationError(
                _('Proposed and implemented action counts must match'
                  ' (K_z = K_a), not {} × {}.').format(pi.shape[1], pi.shape[2])
            )
        if not np.all(np.isfinite(pi)) or np.any(pi < 0.0):
            raise ValidationError(_('Compliance entries must be finite and ≥ 0.'))
        pi = self.renormalized(pi)
        pi.setflags(write=False)
        self.pi = pi

    def __repr__(self):
        return 'ComplianceMatrix(pi={})'.format(self.pi.tolist())

    def __eq__(self, other):
        return isinstance(other, ComplianceMatrix) and np.array_equal(self.pi, other.pi)

    @staticmethod
    def renormalized(pi):
        low, high = RENORMALIZE_BAND
        sums = pi.sum(axis=2)
        problems = []
        for (context, row), total in np.ndenumerate(sums):
            if not (low <= total <= high):
                problems.append(
                    _('context {} row {} sums to {!r}').format(context, row, float(total))
                )
        if problems:
            raise ValidationError(
                _('Compliance rows must sum to 1 (tolerance band {}–{}): {}')
                .format(low, high, '; '.join(problems))
            )
        # Rows already on the simplex are left untouched, so reloading a
        # renormalized matrix gives back the same bits.
        scale = np.where(np.abs(sums - 1.0) > RESCALE_THRESHOLD, sums, 1.0)
        return pi / scale[:, :, np.newaxis]

    @property
    def num_contexts(self):
        return self.pi.shape[0]

    @property
    def num_arms(self):
        return self.pi.shape[1]

    @classmethod
    def identity(cls, num_arms, num_contexts=1):
        return cls(np.tile(np.eye(num_arms), (num_contexts, 1, 1)))
