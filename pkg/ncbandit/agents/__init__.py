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

"""The Thompson sampling agents, and a registry to build them by kind."""

from gettext import gettext as _

import importlib
from collections import namedtuple

from ..helpers.errors import ValidationError
from ..inference.variational import ConjugatePrior

__all__ = (
    'REGISTERED_AGENTS',
    'AgentSpec',
    'build_agent',
    'load_agent_class',
    'spec_label',
)


AgentRegistryEntry = namedtuple(
    'AgentRegistryEntry', ('verbose_name', 'agent_class'),
)

REGISTERED_AGENTS = {
    'ts': AgentRegistryEntry(
        'Thompson sampling',
        'ncbandit.agents.thompson.ThompsonAgent',
    ),
    'ts-check': AgentRegistryEntry(
        'Thompson sampling on compliant steps only',
        'ncbandit.agents.thompson.CheckAgent',
    ),
    'ts-obs': AgentRegistryEntry(
        'Thompson sampling with observed compliance',
        'ncbandit.agents.observed.ObservedAgent',
    ),
    'ts-lat': AgentRegistryEntry(
        'Thompson sampling with latent compliance (variational)',
        'ncbandit.agents.latent.LatentAgent',
    ),
    'uniform': AgentRegistryEntry(
        'Uniform exploration',
        'ncbandit.agents.baseline.UniformAgent',
    ),
    'oracle': AgentRegistryEntry(
        'Oracle (always the best proposal)',
        'ncbandit.agents.baseline.OracleAgent',
    ),
}

AgentSpec = namedtuple(
    'AgentSpec', ('kind', 'label', 'prior_alpha', 'prior_beta', 'soft_start', 'vi'),
)
AgentSpec.__new__.__defaults__ = ('', 1.0, 1.0, 0, None)


def load_agent_class(kind):
    entry = REGISTERED_AGENTS.get(kind)
    if not entry:
        raise ValidationError(
            _('Unknown agent kind ‘{}’; try one of: {}')
            .format(kind, ', '.join(sorted(REGISTERED_AGENTS)))
        )
    import_path, class_name = tuple(entry.agent_class.rsplit('.', 1))
    agent_module = importlib.import_module(import_path)
    return getattr(agent_module, class_name)


def spec_label(spec):
    """Return the label an agent built from ``spec`` will carry."""
    if spec.label:
        return spec.label
    if spec.kind == 'ts-lat':
        return '{}-{}'.format(spec.kind, spec.soft_start)
    return spec.kind


def build_agent(spec, environment):
    """Return an agent built from ``spec`` and stood up for ``environment``."""
    cls = load_agent_class(spec.kind)
    prior = ConjugatePrior(spec.prior_alpha, spec.prior_alpha, spec.prior_beta)
    kwargs = {'prior': prior, 'label': spec_label(spec)}
    if spec.kind == 'ts-lat':
        kwargs.update({'soft_start': spec.soft_start, 'vi_config': spec.vi})
    elif spec.kind == 'oracle':
        kwargs['environment'] = environment
    agent = cls(**kwargs)
    return agent.standup(environment.num_contexts, environment.num_arms)
