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

import gettext

from .config import decorate_config
from .config.experiment import parse_config
from .harness import presets
from .harness.replications import run_replications
from .harness.theorems import verify_theorems
from .helpers import logging as logging_helpers
from .helpers.dev.profiling import timefunc
from .inference.variational import VIConfig
from .reports.results import write_results

__all__ = (
    'BanditControl',
)

gettext.install('ncbandit')


class BanditControl(object):
    """
    The hub clients use to run experiments.

    Settings not passed to a method come from the decorated config, so a
    client sets defaults once (log level, workers, priors, VI tolerances)
    and every preset honors them.
    """

    def __init__(self, config=None):
        self.capture_config_lib(config)

    def capture_config_lib(self, config=None):
        self.config = decorate_config(config)
        self.lib_logger = self._get_logger()

    def _get_logger(self):
        """
        Set the library logger level, with just a pseudo handler.

        A client that wants to see log lines attaches its own handler.
        """
        return logging_helpers.set_logger_level(
            logging_helpers.LIB_LOGGER_NAME, self.config['dev.lib_log_level'],
        )

    # ***

    @property
    def vi_config(self):
        return VIConfig(
            tol_epsilon=float(self.config['vi.tol_epsilon']),
            max_iter=int(self.config['vi.max_iter']),
            init_mode=self.config['vi.init_mode'],
        )

    def agent_specs(self, kinds, soft_starts=presets.CB_SOFT_STARTS):
        return presets.agent_specs(
            kinds,
            soft_starts=soft_starts,
            prior_alpha=float(self.config['agents.prior_alpha']),
            prior_beta=float(self.config['agents.prior_beta']),
            vi=self.vi_config,
        )

    def _run_kwargs(self, seed, workers):
        return {
            'seed': int(self.config['run.seed']) if seed is None else seed,
            'workers': int(self.config['run.workers']) if workers is None else workers,
            'output_dir': self.config['run.output_dir'],
            'write_traces': bool(self.config['run.write_traces']),
            'wall_time': bool(self.config['run.wall_time']),
            'vi': self.vi_config,
        }

    # ***

    @timefunc
    def sweep(self, grid=None, horizon=None, replications=None, seed=None, workers=None):
        return presets.sweep_noncompliance(
            grid=grid,
            agents=self.agent_specs(presets.SWEEP_AGENTS),
            horizon=horizon,
            replications=replications,
            **self._run_kwargs(seed, workers)
        )

    @timefunc
    def cb(
        self,
        envs=None,
        soft_starts=presets.CB_SOFT_STARTS,
        horizon=None,
        replications=None,
        seed=None,
        workers=None,
    ):
        return presets.run_cb_suite(
            envs=envs,
            agents=self.agent_specs(presets.CB_AGENTS, soft_starts=soft_starts),
            horizon=horizon,
            replications=replications,
            **self._run_kwargs(seed, workers)
        )

    @timefunc
    def ist(self, reward_class, horizon=None, replications=None, seed=None, workers=None):
        return presets.run_ist(
            reward_class,
            agents=self.agent_specs(presets.IST_AGENTS),
            horizon=horizon,
            replications=replications,
            **self._run_kwargs(seed, workers)
        )

    @timefunc
    def run(self, path, workers=None):
        """Run the experiment document at ``path``; ``workers`` overrides its own."""
        experiment = parse_config(path, settings=self.config)
        if workers is not None:
            experiment = experiment._replace(workers=workers)
        return experiment, run_replications(experiment)

    @timefunc
    def verify(self, num_trials=10000, seed=None):
        seed = int(self.config['run.seed']) if seed is None else seed
        return verify_theorems(num_trials=num_trials, seed=seed)

    def write(self, result, directory=None, write_traces=None):
        directory = directory or self.config['run.output_dir']
        if write_traces is None:
            write_traces = bool(self.config['run.write_traces'])
        return write_results(result, directory, write_traces=write_traces)
