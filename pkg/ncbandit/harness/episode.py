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

"""One agent, one environment, one seeded horizon."""

from gettext import gettext as _

import logging

from ..helpers.errors import NCBanditError, ValidationError
from ..items.regret_trace import RegretTrace

__all__ = (
    'AGENT_STREAM',
    'ENVIRONMENT_STREAM',
    'run_episode',
)


logger = logging.getLogger('ncbandit.log')

# Child stream ids. Every agent in a replication sees the same context
# and compliance/reward uniforms.
ENVIRONMENT_STREAM = 0
AGENT_STREAM = 1


def run_episode(environment, agent, horizon, rng):
    """Play ``horizon`` steps and return the cumulative expected regret trace.

    Each step the context is revealed, the agent proposes, the environment
    implements and rewards, and the agent observes (the implemented action
    only if it models compliance). Regret is the gap between the best and
    the proposed action under the true parameters.

    An ``NCBanditError`` raised mid-episode stops the episode; the partial
    trace is returned with ``error`` set.
    """
    if (
        agent.num_contexts != environment.num_contexts
        or agent.num_arms != environment.num_arms
    ):
        raise ValidationError(
            _('Agent {} is sized for {}×{}, the environment is {}×{}.').format(
                agent.label, agent.num_contexts, agent.num_arms,
                environment.num_contexts, environment.num_arms,
            )
        )
    trace = RegretTrace(
        horizon,
        agent=agent.label,
        replication=rng.stream_id,
        seed=rng.seed,
        label=environment.label,
    )
    env_rng = rng.spawn(ENVIRONMENT_STREAM)
    agent_rng = rng.spawn(AGENT_STREAM)
    try:
        for _step in range(trace.horizon):
            x = environment.sample_context(env_rng)
            z = agent.propose(agent_rng, x)
            outcome = environment.step_with_context(env_rng, x, z)
            trace.accumulate(environment.instantaneous_regret(x, z))
            implemented = outcome.implemented if agent.observes_compliance else None
            agent.observe(x, z, outcome.reward, a=implemented, rng=agent_rng)
    except NCBanditError as err:
        trace.fail(_('Step {}: {}').format(trace.steps, err))
        logger.error(
            'Episode failed: {} on {} (replication {}): {}'
            .format(agent.label, environment.label, trace.replication, err)
        )

    trace.vi_runs = agent.vi_runs
    trace.vi_converged = agent.vi_converged
    if trace.vi_runs > trace.vi_converged:
        trace.annotate(
            _('VI did not converge on {} of {} runs.')
            .format(trace.vi_runs - trace.vi_converged, trace.vi_runs)
        )
    return trace
