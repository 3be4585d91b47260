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

from gettext import gettext as _

import numpy as np

from ..helpers.errors import ValidationError
from .item_base import BaseItem

__all__ = ('RegretTrace', )


class RegretTrace(BaseItem):
    """Per-step cumulative expected regret of one seeded episode."""

    def __init__(self, horizon, agent='', replication=0, seed=0, label=''):
        super(RegretTrace, self).__init__(label)
        if horizon < 1:
            raise ValidationError(_('The horizon must be ≥ 1, not: {!r}').format(horizon))
        self.horizon = int(horizon)
        self.agent = agent
        self.replication = int(replication)
        self.seed = int(seed)
        self.steps = 0
        self.annotations = []
        self.error = None
        self.wall_ms = 0
        self.vi_runs = 0
        self.vi_converged = 0
        self._cumulative = np.zeros(self.horizon)

    def accumulate(self, regret):
        if self.steps >= self.horizon:
            raise ValidationError(_('The trace is already {} steps long.')
                                  .format(self.horizon))
        previous = self._cumulative[self.steps - 1] if self.steps else 0.0
        self._cumulative[self.steps] = previous + regret
        self.steps += 1

    def annotate(self, message):
        self.annotations.append(message)

    def fail(self, message):
        self.error = message
        self.annotate(message)

    @property
    def cumulative(self):
        return self._cumulative[:self.steps]

    @property
    def final(self):
        return float(self._cumulative[self.steps - 1]) if self.steps else 0.0

    @property
    def complete(self):
        return self.steps == self.horizon

    @property
    def failed(self):
        return self.error is not None

    @property
    def vi_converged_frac(self):
        if not self.vi_runs:
            return 1.0
        return self.vi_converged / self.vi_runs
