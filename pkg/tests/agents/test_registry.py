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

import pytest

from ncbandit.agents import (
    REGISTERED_AGENTS,
    AgentSpec,
    build_agent,
    load_agent_class,
    spec_label,
)
from ncbandit.agents.base import BaseAgent
from ncbandit.helpers.errors import ValidationError
from ncbandit.inference.variational import VIConfig


class TestRegistry(object):
    def test_every_kind_loads(self, agent_kind_parametrized):
        cls = load_agent_class(agent_kind_parametrized)
        assert issubclass(cls, BaseAgent)
        assert cls.kind == agent_kind_parametrized

    def test_unknown_kind(self):
        with pytest.raises(ValidationError) as excinfo:
            load_agent_class('eps-greedy')
        assert 'ts-obs' in str(excinfo.value)

    def test_kinds(self):
        assert set(REGISTERED_AGENTS) == {
            'ts', 'ts-check', 'ts-obs', 'ts-lat', 'uniform', 'oracle',
        }


class TestSpecLabel(object):
    @pytest.mark.parametrize('spec, label', (
        (AgentSpec('ts'), 'ts'),
        (AgentSpec('ts-lat', soft_start=40), 'ts-lat-40'),
        (AgentSpec('ts-lat', label='lat'), 'lat'),
    ))
    def test_label(self, spec, label):
        assert spec_label(spec) == label


class TestBuildAgent(object):
    def test_built_agent_is_ready(self, agent_kind_parametrized, contextual_environment):
        agent = build_agent(AgentSpec(agent_kind_parametrized), contextual_environment)
        assert agent.ready
        assert agent.num_contexts == 2
        assert agent.num_arms == 2

    def test_prior_is_passed_on(self, two_arm_environment):
        agent = build_agent(AgentSpec('ts', prior_alpha=2.0, prior_beta=0.5), two_arm_environment)
        assert agent.success.tolist() == [[2.0, 2.0]]
        assert agent.failure.tolist() == [[2.0, 2.0]]
        assert agent.prior.beta == 0.5

    def test_latent_settings(self, two_arm_environment):
        spec = AgentSpec('ts-lat', soft_start=7, vi=VIConfig(max_iter=9))
        agent = build_agent(spec, two_arm_environment)
        assert agent.soft_start == 7
        assert agent.vi_config.max_iter == 9
        assert agent.label == 'ts-lat-7'

    def test_oracle_gets_the_environment(self, swapped_environment):
        agent = build_agent(AgentSpec('oracle'), swapped_environment)
        assert agent.environment is swapped_environment
