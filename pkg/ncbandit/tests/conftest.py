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

"""Global fixtures."""

import pytest

from ncbandit.agents import REGISTERED_AGENTS, AgentSpec
from ncbandit.config import decorate_config
from ncbandit.config.experiment import ExperimentConfig
from ncbandit.helpers.samplers import RngStream
from ncbandit.inference.variational import VIConfig
from ncbandit.items.environment import Environment


def _base_config():
    """Provide a generic baseline configuration."""
    base_config = {
        'dev': {
            'lib_log_level': 'WARNING',
            'color_logs': False,
        },
        'run': {
            'horizon': 50,
            'replications': 3,
            'seed': 7,
            'workers': 1,
            'output_dir': 'results',
        },
    }
    # Return a plain dict, so tests can set invalid values without
    # tripping the decorator's validation.
    return decorate_config(base_config).as_dict()


@pytest.fixture
def base_config():
    return _base_config()


# ***

@pytest.fixture
def rng():
    return RngStream(7)


@pytest.fixture(params=(0, 1, 12345, 2 ** 63))
def seed_parametrized(request):
    return request.param


@pytest.fixture(params=sorted(REGISTERED_AGENTS))
def agent_kind_parametrized(request):
    return request.param


@pytest.fixture(params=('ts', 'ts-check', 'ts-obs'))
def conjugate_kind_parametrized(request):
    return request.param


# ***

@pytest.fixture
def two_arm_environment():
    """The compliant two-arm environment, μ = (0.75, 0.25)."""
    return Environment.from_rows((0.75, 0.25), ((1.0, 0.0), (0.0, 1.0)), label='p=0.00')


@pytest.fixture
def swapped_environment():
    """Every proposal implements the other arm."""
    return Environment.from_rows((0.75, 0.25), ((0.0, 1.0), (1.0, 0.0)), label='swap')


@pytest.fixture
def contextual_environment():
    """Two contexts, stochastic compliance, contexts equally likely."""
    return Environment.from_rows(
        ((0.65, 0.35), (0.25, 0.75)),
        (
            ((0.7, 0.3), (0.4, 0.6)),
            ((0.6, 0.4), (0.3, 0.7)),
        ),
        context_probs=(0.5, 0.5),
        label='env-3',
    )


@pytest.fixture
def three_arm_environment():
    return Environment.from_rows(
        (0.2, 0.5, 0.8),
        (
            (0.8, 0.1, 0.1),
            (0.1, 0.8, 0.1),
            (0.1, 0.1, 0.8),
        ),
        label='three',
    )


# ***

@pytest.fixture
def agent_specs():
    return [
        AgentSpec(kind='ts', label='ts'),
        AgentSpec(kind='ts-obs', label='ts-obs'),
        AgentSpec(kind='ts-lat', label='ts-lat-5', soft_start=5, vi=VIConfig(max_iter=50)),
    ]


@pytest.fixture
def experiment_config(two_arm_environment, agent_specs, tmpdir):
    """A small, fast experiment."""
    return ExperimentConfig(
        experiment='unit',
        environment=two_arm_environment,
        agents=agent_specs,
        horizon=40,
        replications=3,
        seed=11,
        workers=1,
        output_dir=tmpdir.join('results').strpath,
        write_traces=False,
        wall_time=False,
        vi=VIConfig(),
    )


EXPERIMENT_DOCUMENT = """
schema_version = 1
experiment = doc

[environment]
label = p=0.20
context_probs = 1.0,
[[context_0]]
mu = 0.75, 0.25
pi_0 = 0.8, 0.2
pi_1 = 0.2, 0.8

[run]
horizon = 30
replications = 2
seed = 5

[vi]
max_iter = 100

[agents]
prior_beta = 2.0
[[ts]]
kind = ts
[[ts-lat-10]]
kind = ts-lat
soft_start = 10
tol_epsilon = 1e-5
"""


@pytest.fixture
def experiment_document(tmpdir):
    """Provide the path to a valid experiment document."""
    path = tmpdir.join('experiment.ini')
    path.write(EXPERIMENT_DOCUMENT)
    return path.strpath
