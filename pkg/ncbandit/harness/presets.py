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

"""Preset experiments: the two-arm compliance sweep, the four contextual
environments, and the six-arm stroke trial replay.

The constants below are the published parameters. The stroke trial
compliance rows are printed to three decimals, so two of them sum to
0.999 and 1.001; ``ComplianceMatrix`` rescales them on load.
"""

from gettext import gettext as _

import logging
from collections import OrderedDict, namedtuple

import numpy as np

from ..agents import AgentSpec, spec_label
from ..config.experiment import ExperimentConfig
from ..helpers.errors import ValidationError
from ..inference.variational import VIConfig
from ..items.environment import Environment
from .replications import ExperimentResult, run_replications

__all__ = (
    'CB_COMPLIANCE',
    'CB_CONTEXT_PROBS',
    'CB_REWARDS',
    'DESK_PRESETS',
    'IST_COMPLIANCE',
    'IST_REWARDS',
    'FULL_PRESETS',
    'SWEEP_MU',
    'ExcessSuccessReport',
    'Preset',
    'agent_specs',
    'cb_environment',
    'ist_environment',
    'make_config',
    'run_cb_suite',
    'run_ist',
    'sweep_compliance',
    'sweep_environment',
    'sweep_grid',
    'sweep_label',
    'sweep_noncompliance',
)


logger = logging.getLogger('ncbandit.log')

Preset = namedtuple('Preset', ('horizon', 'replications'))

# Desk scale keeps CI runs to minutes.
DESK_PRESETS = {
    'sweep': Preset(2000, 30),
    'cb': Preset(1000, 50),
    'ist': Preset(5000, 100),
}

FULL_PRESETS = {
    'sweep': Preset(10000, 100),
    # The contextual suite's horizon is never published; 1e4 matches the sweep.
    'cb': Preset(10000, 100),
    'ist': Preset(20000, 500),
}


# ***
# *** Two-arm sweep: Π = ((1 − p, p), (p, 1 − p)), p from 0 to 1 by 0.05.
# ***

SWEEP_MU = (0.75, 0.25)

SWEEP_GRID_STEP = 0.05

SWEEP_AGENTS = ('ts', 'ts-check', 'ts-obs')

# Above this p, ts-check is known to suffer linear regret; its rows are
# still computed but flagged.
SWEEP_CHECK_FLAG_ABOVE = 0.5


def sweep_compliance(p):
    if not (0.0 <= p <= 1.0):
        raise ValidationError(_('The sweep p must lie in [0, 1], not: {!r}').format(p))
    return ((1.0 - p, p), (p, 1.0 - p))


def sweep_label(p):
    return 'p={:.2f}'.format(p)


def sweep_environment(p):
    return Environment.from_rows(
        SWEEP_MU, sweep_compliance(p), label=sweep_label(p),
    )


def sweep_grid(step=SWEEP_GRID_STEP, stop=1.0):
    """Return ``0, step, 2·step, …`` up to ``stop``, rounded against drift."""
    if not (0.0 < step <= 1.0) or not (0.0 <= stop <= 1.0):
        raise ValidationError(
            _('Need 0 < step ≤ 1 and 0 ≤ stop ≤ 1, not step={!r} stop={!r}.')
            .format(step, stop)
        )
    count = int(np.floor(stop / step + 1e-9)) + 1
    return [round(index * step, 10) for index in range(count)]


# ***
# *** Contextual suite: two contexts, p(x=0) = p(x=1) = 0.5.
# ***

CB_CONTEXT_PROBS = (0.5, 0.5)

CB_REWARDS = (
    (0.65, 0.35),
    (0.25, 0.75),
)

CB_COMPLIANCE = {
    # Full compliance.
    1: (
        ((1.0, 0.0), (0.0, 1.0)),
        ((1.0, 0.0), (0.0, 1.0)),
    ),
    # Deterministic swap.
    2: (
        ((0.0, 1.0), (1.0, 0.0)),
        ((0.0, 1.0), (1.0, 0.0)),
    ),
    # Stochastic, compliant in expectation.
    3: (
        ((0.7, 0.3), (0.4, 0.6)),
        ((0.6, 0.4), (0.3, 0.7)),
    ),
    # Stochastic, noncompliant in expectation.
    4: (
        ((0.3, 0.7), (0.6, 0.4)),
        ((0.4, 0.6), (0.7, 0.3)),
    ),
}

CB_AGENTS = ('ts', 'ts-check', 'ts-obs', 'ts-lat')

CB_SOFT_STARTS = (0, 40)


def cb_label(env_id):
    return 'env-{}'.format(env_id)


def cb_environment(env_id):
    if env_id not in CB_COMPLIANCE:
        raise ValidationError(
            _('Unknown contextual environment {!r}; try one of: {}')
            .format(env_id, ', '.join(str(key) for key in sorted(CB_COMPLIANCE)))
        )
    return Environment.from_rows(
        CB_REWARDS,
        CB_COMPLIANCE[env_id],
        context_probs=CB_CONTEXT_PROBS,
        label=cb_label(env_id),
    )


# ***
# *** Stroke trial replay: one context, six treatment arms.
# ***

IST_COMPLIANCE = (
    (0.980, 0.002, 0.002, 0.014, 0.001, 0.001),
    (0.000, 0.975, 0.009, 0.000, 0.014, 0.002),
    (0.000, 0.005, 0.983, 0.000, 0.000, 0.012),
    (0.068, 0.001, 0.001, 0.928, 0.000, 0.001),
    (0.000, 0.102, 0.001, 0.000, 0.882, 0.015),
    (0.000, 0.001, 0.082, 0.000, 0.004, 0.914),
)

# Short-term survival, long-term survival, long-term recovery.
IST_REWARDS = OrderedDict((
    ('sts', (0.886, 0.886, 0.888, 0.903, 0.896, 0.910)),
    ('lts', (0.760, 0.749, 0.747, 0.785, 0.775, 0.782)),
    ('ltr', (0.181, 0.178, 0.181, 0.201, 0.208, 0.206)),
))

IST_AGENTS = ('ts', 'ts-check', 'ts-obs')

BASELINE_KIND = 'uniform'


def ist_environment(reward_class):
    reward_class = str(reward_class).lower()
    if reward_class not in IST_REWARDS:
        raise ValidationError(
            _('Unknown reward class ‘{}’; try one of: {}')
            .format(reward_class, ', '.join(IST_REWARDS))
        )
    return Environment.from_rows(
        IST_REWARDS[reward_class], IST_COMPLIANCE, label='ist-{}'.format(reward_class),
    )


ExcessSuccessReport = namedtuple(
    'ExcessSuccessReport', ('reward_class', 'excess', 'result'),
)


# ***

def agent_specs(
    kinds,
    soft_starts=CB_SOFT_STARTS,
    prior_alpha=1.0,
    prior_beta=1.0,
    vi=None,
):
    """Return one labeled ``AgentSpec`` per kind, and per soft start for ``ts-lat``."""
    specs = []
    for kind in kinds:
        starts = soft_starts if kind == 'ts-lat' else (0,)
        for soft_start in starts:
            spec = AgentSpec(
                kind=kind,
                prior_alpha=float(prior_alpha),
                prior_beta=float(prior_beta),
                soft_start=int(soft_start),
                vi=(vi or VIConfig()) if kind == 'ts-lat' else None,
            )
            specs.append(spec._replace(label=spec_label(spec)))
    return specs


def make_config(
    experiment,
    environment,
    agents,
    horizon,
    replications,
    seed=1,
    workers=1,
    output_dir='results',
    write_traces=False,
    wall_time=False,
    vi=None,
):
    return ExperimentConfig(
        experiment=experiment,
        environment=environment,
        agents=list(agents),
        horizon=int(horizon),
        replications=int(replications),
        seed=int(seed),
        workers=int(workers),
        output_dir=output_dir,
        write_traces=bool(write_traces),
        wall_time=bool(wall_time),
        vi=vi or VIConfig(),
    )


def _preset(name, horizon, replications):
    preset = DESK_PRESETS[name]
    return (
        preset.horizon if horizon is None else horizon,
        preset.replications if replications is None else replications,
    )


# ***

def sweep_noncompliance(
    grid=None,
    agents=None,
    horizon=None,
    replications=None,
    seed=1,
    workers=1,
    **kwargs
):
    """Run every agent at every p of ``grid``; one summary per (p, agent).

    Rows of ``ts-check`` above p = 0.5 are computed and flagged.
    """
    grid = sweep_grid() if grid is None else list(grid)
    agents = agent_specs(SWEEP_AGENTS) if agents is None else agents
    horizon, replications = _preset('sweep', horizon, replications)
    results = []
    for p in grid:
        config = make_config(
            'sweep', sweep_environment(p), agents, horizon, replications,
            seed=seed, workers=workers, **kwargs
        )
        result = run_replications(config)
        if p > SWEEP_CHECK_FLAG_ABOVE:
            for spec in agents:
                if spec.kind != 'ts-check':
                    continue
                flag = _('{} {}: compliance is worse than chance,'
                         ' updates only on compliant steps').format(
                    sweep_label(p), spec_label(spec),
                )
                logger.warning(flag)
                result.flags.append(flag)
        results.append(result)
    return ExperimentResult.merge('sweep', results)


def run_cb_suite(
    envs=None,
    agents=None,
    horizon=None,
    replications=None,
    seed=1,
    workers=1,
    **kwargs
):
    """Run every agent on each contextual environment (all four by default)."""
    envs = sorted(CB_COMPLIANCE) if envs is None else list(envs)
    agents = agent_specs(CB_AGENTS) if agents is None else agents
    horizon, replications = _preset('cb', horizon, replications)
    results = [
        run_replications(make_config(
            'cb', cb_environment(env_id), agents, horizon, replications,
            seed=seed, workers=workers, **kwargs
        ))
        for env_id in envs
    ]
    return ExperimentResult.merge('cb', results)


def run_ist(
    reward_class,
    agents=None,
    horizon=None,
    replications=None,
    seed=1,
    workers=1,
    **kwargs
):
    """Replay the stroke trial and report each agent's excess successes.

    Excess successes are the uniform baseline's mean final expected regret
    minus the agent's; the baseline reports 0.
    """
    environment = ist_environment(reward_class)
    agents = agent_specs(IST_AGENTS) if agents is None else list(agents)
    if not any(spec.kind == BASELINE_KIND for spec in agents):
        agents = agents + agent_specs((BASELINE_KIND,))
    horizon, replications = _preset('ist', horizon, replications)
    config = make_config(
        environment.label, environment, agents, horizon, replications,
        seed=seed, workers=workers, **kwargs
    )
    result = run_replications(config)

    baseline_label = next(
        spec_label(spec) for spec in agents if spec.kind == BASELINE_KIND
    )
    baseline = result.summary_for(environment.label, baseline_label).mean
    excess = OrderedDict()
    for spec in agents:
        label = spec_label(spec)
        if label == baseline_label:
            excess[label] = 0.0
        else:
            excess[label] = baseline - result.summary_for(environment.label, label).mean
        logger.info('{}: {} excess successes {:.3f}'.format(
            environment.label, label, excess[label],
        ))
    return ExcessSuccessReport(reward_class.lower(), excess, result)
