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

"""Independent seeded replications, run inline or over a process pool.

Replication ``i`` of every agent draws from stream ``(seed, i)``, so a
result depends only on the config and the master seed, never on how many
workers ran it or in what order they finished.
"""

from gettext import gettext as _

import logging
import os
from collections import OrderedDict, namedtuple
from concurrent.futures import ProcessPoolExecutor, as_completed

import numpy as np

from ..agents import build_agent, spec_label
from ..helpers.dev.profiling import TimeWith
from ..helpers.errors import ValidationError
from ..helpers.samplers import RngStream
from ..items.regret_trace import RegretTrace
from .episode import run_episode

__all__ = (
    'RESULT_HEADERS',
    'SUMMARY_HEADERS',
    'WORKERS_ENVIRON',
    'ExperimentResult',
    'ReplicationTask',
    'ResultRecord',
    'SummaryStats',
    'resolve_workers',
    'run_replications',
    'run_task',
    'summarize',
)


logger = logging.getLogger('ncbandit.log')

WORKERS_ENVIRON = 'NCBANDIT_WORKERS'

ResultRecord = namedtuple(
    'ResultRecord', (
        'experiment',
        'agent',
        'replication',
        'seed',
        'label',
        'final_regret',
        'vi_converged_frac',
        'wall_ms',
    ),
)

SummaryStats = namedtuple('SummaryStats', ('label', 'agent', 'q50', 'mean', 'std', 'n'))

RESULT_HEADERS = ResultRecord._fields
SUMMARY_HEADERS = SummaryStats._fields

ReplicationTask = namedtuple(
    'ReplicationTask', (
        'environment',
        'spec',
        'horizon',
        'seed',
        'replication',
        'agent_index',
        'wall_time',
    ),
)


def summarize(values, label='', agent=''):
    """Return the median, mean, and sample standard deviation of ``values``.

    The median of an even count is the midpoint of the middle two; a single
    value has a standard deviation of 0.
    """
    values = np.asarray(values, dtype=float)
    if not values.size:
        return SummaryStats(label, agent, float('nan'), float('nan'), float('nan'), 0)
    std = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return SummaryStats(
        label, agent, float(np.median(values)), float(np.mean(values)), std,
        int(values.size),
    )


class ExperimentResult(object):
    """Traces of every (agent, replication) pair, plus their summaries."""

    def __init__(self, experiment, traces, flags=(), configs=()):
        self.experiment = experiment
        self.traces = list(traces)
        self.flags = list(flags)
        self.configs = list(configs)

    def __repr__(self):
        return 'ExperimentResult(experiment={!r}, traces={}, failures={})'.format(
            self.experiment, len(self.traces), len(self.failures()),
        )

    @classmethod
    def merge(cls, experiment, results):
        traces, flags, configs = [], [], []
        for result in results:
            traces.extend(result.traces)
            flags.extend(result.flags)
            configs.extend(result.configs)
        return cls(experiment, traces, flags, configs)

    def successes(self):
        return [trace for trace in self.traces if not trace.failed]

    def failures(self):
        return [trace for trace in self.traces if trace.failed]

    def records(self):
        """Return one ``ResultRecord`` per successful (agent, replication)."""
        return [
            ResultRecord(
                experiment=self.experiment,
                agent=trace.agent,
                replication=trace.replication,
                seed=trace.seed,
                label=trace.label,
                final_regret=trace.final,
                vi_converged_frac=trace.vi_converged_frac,
                wall_ms=trace.wall_ms,
            )
            for trace in self.successes()
        ]

    def summaries(self):
        """Return one ``SummaryStats`` per (label, agent), in run order."""
        groups = OrderedDict()
        for trace in self.traces:
            groups.setdefault((trace.label, trace.agent), [])
            if not trace.failed:
                groups[(trace.label, trace.agent)].append(trace.final)
        return [
            summarize(finals, label=label, agent=agent)
            for (label, agent), finals in groups.items()
        ]

    def summary_for(self, label, agent):
        for stats in self.summaries():
            if stats.label == label and stats.agent == agent:
                return stats
        raise KeyError((label, agent))


# ***

def resolve_workers(workers=1):
    """Return the worker count, letting ``NCBANDIT_WORKERS`` override it."""
    override = os.environ.get(WORKERS_ENVIRON)
    if override:
        try:
            workers = int(override)
        except ValueError:
            raise ValidationError(
                _('{} must be an integer, not: {!r}').format(WORKERS_ENVIRON, override)
            )
    if workers is None:
        workers = 1
    if workers < 1:
        raise ValidationError(_('The worker count must be ≥ 1, not: {}').format(workers))
    return int(workers)


def run_task(task):
    """Run one replication of one agent; safe to call in a worker process."""
    agent = build_agent(task.spec, task.environment)
    rng = RngStream(task.seed, task.replication)
    with TimeWith(agent.label) as timer:
        trace = run_episode(task.environment, agent, task.horizon, rng)
    if task.wall_time:
        trace.wall_ms = timer.elapsed_ms
    return task.agent_index, trace


def _failed_task(task, err):
    trace = RegretTrace(
        task.horizon,
        agent=spec_label(task.spec),
        replication=task.replication,
        seed=task.seed,
        label=task.environment.label,
    )
    trace.fail('{}: {}'.format(type(err).__name__, err))
    logger.error(
        'Replication {} of {} failed: {}'.format(task.replication, trace.agent, err)
    )
    return task.agent_index, trace


def _run_guarded(task):
    try:
        return run_task(task)
    except Exception as err:
        return _failed_task(task, err)


def _execute(tasks, workers):
    if workers == 1 or len(tasks) <= 1:
        return [_run_guarded(task) for task in tasks]
    outcomes = []
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(run_task, task): task for task in tasks}
        for future in as_completed(futures):
            try:
                outcomes.append(future.result())
            except Exception as err:
                outcomes.append(_failed_task(futures[future], err))
    return outcomes


def run_replications(config, experiment=None):
    """Run ``config.replications`` episodes per agent of ``config.agents``.

    ``config`` needs ``environment``, ``agents``, ``horizon``,
    ``replications``, ``seed``, ``workers``, and ``wall_time``; an
    ``ExperimentConfig`` has all of them.
    """
    if config.horizon < 1 or config.replications < 1:
        raise ValidationError(
            _('Need T ≥ 1 and R ≥ 1, not T={} and R={}.')
            .format(config.horizon, config.replications)
        )
    workers = resolve_workers(config.workers)
    tasks = [
        ReplicationTask(
            config.environment,
            spec,
            int(config.horizon),
            int(config.seed),
            replication,
            agent_index,
            bool(config.wall_time),
        )
        for agent_index, spec in enumerate(config.agents)
        for replication in range(int(config.replications))
    ]
    logger.info(
        'Running {} replications × {} agents on ‘{}’ (T={}, seed={}, workers={})'
        .format(
            config.replications, len(config.agents), config.environment.label,
            config.horizon, config.seed, workers,
        )
    )
    outcomes = _execute(tasks, workers)
    outcomes.sort(key=lambda outcome: (outcome[0], outcome[1].replication))
    result = ExperimentResult(
        experiment if experiment is not None else getattr(config, 'experiment', ''),
        [trace for _index, trace in outcomes],
        configs=[config],
    )
    for trace in result.traces:
        if trace.vi_runs > trace.vi_converged:
            logger.warning(
                '{} replication {}: {}'.format(
                    trace.agent, trace.replication, trace.annotations[-1],
                )
            )
    return result
