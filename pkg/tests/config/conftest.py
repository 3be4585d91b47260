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

"""Fixtures that are of general use."""

from configobj import ConfigObj

import pytest

from ncbandit.config import ConfigRoot
from ncbandit.config.log_levels import LOG_LEVELS


@pytest.fixture(params=list(LOG_LEVELS.keys()) + ['WARNING', 10, ])
def log_level_valid_parametrized(request):
    """Return each of the valid log level strings."""
    return request.param


@pytest.fixture(params=(None, 123, '123', 'abc', ''))
def log_level_invalid_parametrized(request):
    """Return selection of invalid log level strings."""
    return request.param


@pytest.fixture
def config_root():
    config_root = ConfigRoot
    config_root.forget_config_values()
    return config_root


@pytest.fixture
def configobj_instance(request):
    """Provide a ``ConfigObj`` instance and its expected config dict."""

    config = ConfigObj()
    config['dev'] = {}
    config['dev']['lib_log_level'] = 'debug'
    config['dev']['color_logs'] = True
    config['run'] = {}
    config['run']['horizon'] = 100
    config['run']['replications'] = 5
    config['run']['seed'] = 42
    config['run']['workers'] = 2
    config['run']['output_dir'] = '/tmp/ncbandit-tests-results'
    config['run']['write_traces'] = True
    config['run']['wall_time'] = False
    config['vi'] = {}
    config['vi']['tol_epsilon'] = 1e-5
    config['vi']['max_iter'] = 50
    config['vi']['init_mode'] = 'uniform'
    config['agents'] = {}
    config['agents']['prior_alpha'] = 2.0
    config['agents']['prior_beta'] = 0.5

    expectation = {
        'dev': {
            'lib_log_level': 'debug',
            'color_logs': 'True',
        },
        'run': {
            'horizon': '100',
            'replications': '5',
            'seed': '42',
            'workers': '2',
            'output_dir': '/tmp/ncbandit-tests-results',
            'write_traces': 'True',
            'wall_time': 'False',
        },
        'vi': {
            'tol_epsilon': '1e-05',
            'max_iter': '50',
            'init_mode': 'uniform',
        },
        'agents': {
            'prior_alpha': '2.0',
            'prior_beta': '0.5',
        },
    }

    return config, expectation
