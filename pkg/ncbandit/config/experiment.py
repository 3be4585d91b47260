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

"""Experiment documents: a versioned ``configobj`` INI schema.

A document looks like::

    schema_version = 1
    experiment = sweep-p0.25

    [environment]
    label = p=0.25
    context_probs = 1.0,
    [[context_0]]
    mu = 0.75, 0.25
    pi_0 = 0.75, 0.25
    pi_1 = 0.25, 0.75

    [run]
    horizon = 2000
    replications = 30
    seed = 1

    [agents]
    [[ts]]
    kind = ts
    [[ts-lat-40]]
    kind = ts-lat
    soft_start = 40

Keys missing from ``[run]``, ``[vi]`` and ``[agents]`` take the
``ConfigRoot`` defaults. Every violation in a document is reported
together, and unknown sections or keys are violations.
"""

from gettext import gettext as _

import os
import re
from collections import namedtuple

from configobj import ConfigObj, ConfigObjError, flatten_errors, get_extra_values
from validate import Validator

from ..agents import REGISTERED_AGENTS, AgentSpec, spec_label
from ..helpers.errors import ConfigFileError, ConfigSchemaError, ValidationError
from ..inference.variational import INIT_MODES, VIConfig, must_verify_vi_config
from ..items.environment import Environment
from . import SEED_MAX, decorate_config

__all__ = (
    'SCHEMA_VERSION',
    'AgentSpec',
    'ExperimentConfig',
    'config_document',
    'config_schema',
    'parse_config',
    'parse_document',
    'write_config',
)


SCHEMA_VERSION = 1

ExperimentConfig = namedtuple(
    'ExperimentConfig', (
        'experiment',
        'environment',
        'agents',
        'horizon',
        'replications',
        'seed',
        'workers',
        'output_dir',
        'write_traces',
        'wall_time',
        'vi',
    ),
)

CONTEXT_SECTION_RE = re.compile(r'^context_(\d+)$')
ROW_KEY_RE = re.compile(r'^pi_(\d+)$')


def _options(choices):
    return ', '.join("'{}'".format(choice) for choice in choices)


def config_schema(settings=None):
    """Return the configspec lines, defaults filled from ``settings``."""
    settings = decorate_config(settings)
    return """
schema_version = integer(min={version}, max={version}, default={version})
experiment = string(default='custom')

[environment]
label = string(default='')
context_probs = float_list(min=1, default=None)
    [[__many__]]
    mu = float_list(min=2)
    __many__ = float_list(min=2)

[run]
horizon = integer(min=1, default={horizon})
replications = integer(min=1, default={replications})
seed = integer(min=0, max={seed_max}, default={seed})
workers = integer(min=1, default={workers})
output_dir = string(default='{output_dir}')
write_traces = boolean(default={write_traces})
wall_time = boolean(default={wall_time})

[vi]
tol_epsilon = float(min=0, default={tol_epsilon!r})
max_iter = integer(min=1, default={max_iter})
init_mode = option({init_modes}, default='{init_mode}')

[agents]
prior_alpha = float(default={prior_alpha!r})
prior_beta = float(default={prior_beta!r})
    [[__many__]]
    kind = option({kinds})
    label = string(default='')
    soft_start = integer(min=0, default=0)
    prior_alpha = float(default=None)
    prior_beta = float(default=None)
    tol_epsilon = float(min=0, default=None)
    max_iter = integer(min=1, default=None)
    init_mode = option({init_modes}, default=None)
""".format(
        version=SCHEMA_VERSION,
        horizon=int(settings['run.horizon']),
        replications=int(settings['run.replications']),
        seed=int(settings['run.seed']),
        seed_max=SEED_MAX,
        workers=int(settings['run.workers']),
        output_dir=settings['run.output_dir'],
        write_traces=bool(settings['run.write_traces']),
        wall_time=bool(settings['run.wall_time']),
        tol_epsilon=float(settings['vi.tol_epsilon']),
        max_iter=int(settings['vi.max_iter']),
        init_mode=settings['vi.init_mode'],
        init_modes=_options(INIT_MODES),
        prior_alpha=float(settings['agents.prior_alpha']),
        prior_beta=float(settings['agents.prior_beta']),
        kinds=_options(sorted(REGISTERED_AGENTS)),
    ).splitlines()


# ***

def parse_config(path, settings=None):
    """Return the ``ExperimentConfig`` described by the document at ``path``.

    Raises ``ConfigFileError`` if the file is missing or not INI, and
    ``ConfigSchemaError`` listing every violation otherwise.
    """
    if not os.path.isfile(path):
        raise ConfigFileError(_('No experiment document at: {}').format(path))
    try:
        document = ConfigObj(
            path,
            configspec=config_schema(settings),
            encoding='utf-8',
            file_error=True,
        )
    except (IOError, OSError) as err:
        raise ConfigFileError(_('Cannot read {}: {}').format(path, err))
    except ConfigObjError as err:
        raise ConfigFileError(
            _('Cannot parse {}: {}').format(path, err),
            [str(error) for error in getattr(err, 'errors', [])],
        )
    return parse_document(document, settings=settings, source=path)


def parse_document(document, settings=None, source='<document>'):
    """Validate a ``ConfigObj`` (or plain dict) and build its ``ExperimentConfig``."""
    if not isinstance(document, ConfigObj) or document.configspec is None:
        if isinstance(document, ConfigObj):
            document = document.dict()
        document = ConfigObj(document, configspec=config_schema(settings))
    results = document.validate(Validator(), preserve_errors=True)

    problems = _schema_problems(document, results)
    environment = None
    agents = []
    if not problems:
        environment = _parse_environment(document['environment'], problems)
        agents = _parse_agents(document['agents'], document['vi'], problems)
    if problems:
        raise ConfigSchemaError(
            _('{} has {} problem(s).').format(source, len(problems)), problems,
        )

    run = document['run']
    return ExperimentConfig(
        experiment=document['experiment'],
        environment=environment,
        agents=agents,
        horizon=run['horizon'],
        replications=run['replications'],
        seed=run['seed'],
        workers=run['workers'],
        output_dir=run['output_dir'],
        write_traces=run['write_traces'],
        wall_time=run['wall_time'],
        vi=_global_vi(document['vi']),
    )


def _schema_problems(document, results):
    problems = []
    for sections, key, error in flatten_errors(document, results):
        where = '.'.join(list(sections) + ([key] if key else []))
        if error is False:
            problems.append(_('{}: missing').format(where))
        else:
            problems.append(_('{}: {}').format(where, error))
    for sections, name in get_extra_values(document):
        where = '.'.join(list(sections) + [name])
        problems.append(_('{}: unknown key or section').format(where))
    return problems


def _parse_environment(section, problems):
    contexts = {}
    for name in section.sections:
        match = CONTEXT_SECTION_RE.match(name)
        if not match:
            problems.append(
                _('environment.{}: expected context_0, context_1, …').format(name)
            )
            continue
        contexts[int(match.group(1))] = _parse_context(name, section[name], problems)
    if not contexts:
        problems.append(_('environment: needs at least one [[context_N]] section'))
        return None
    if sorted(contexts) != list(range(len(contexts))):
        problems.append(
            _('environment: contexts must be numbered 0..{} without gaps, not {}')
            .format(len(contexts) - 1, sorted(contexts))
        )
    if problems:
        return None

    mu = [contexts[index][0] for index in sorted(contexts)]
    pi = [contexts[index][1] for index in sorted(contexts)]
    try:
        return Environment.from_rows(
            mu, pi, context_probs=section['context_probs'], label=section['label'],
        )
    except ValidationError as err:
        problems.append(_('environment: {}').format(err))
        return None


def _parse_context(name, section, problems):
    num_arms = len(section['mu'])
    rows = {}
    for key in section.scalars:
        if key == 'mu':
            continue
        match = ROW_KEY_RE.match(key)
        if not match:
            problems.append(
                _('environment.{}.{}: expected mu or pi_0..pi_{}')
                .format(name, key, num_arms - 1)
            )
            continue
        rows[int(match.group(1))] = section[key]
    if sorted(rows) != list(range(num_arms)):
        problems.append(
            _('environment.{}: needs compliance rows pi_0..pi_{} (one per arm), found {}')
            .format(name, num_arms - 1, ', '.join('pi_{}'.format(r) for r in sorted(rows)))
        )
        return section['mu'], []
    for row, values in sorted(rows.items()):
        if len(values) != num_arms:
            problems.append(
                _('environment.{}.pi_{}: expected {} entries, not {}')
                .format(name, row, num_arms, len(values))
            )
    return section['mu'], [rows[row] for row in sorted(rows)]


def _global_vi(section):
    return VIConfig(section['tol_epsilon'], section['max_iter'], section['init_mode'])


def _or_default(entry, key, fallback):
    return fallback if entry[key] is None else entry[key]


def _parse_agents(section, vi_section, problems):
    if not section.sections:
        problems.append(_('agents: needs at least one [[name]] agent section'))
        return []
    defaults = _global_vi(vi_section)
    try:
        must_verify_vi_config(defaults)
    except ValidationError as err:
        problems.append(_('vi: {}').format(err))
    agents = []
    for name in section.sections:
        entry = section[name]
        prior_alpha = _or_default(entry, 'prior_alpha', section['prior_alpha'])
        prior_beta = _or_default(entry, 'prior_beta', section['prior_beta'])
        for key, value in (('prior_alpha', prior_alpha), ('prior_beta', prior_beta)):
            if not value > 0:
                problems.append(
                    _('agents.{}.{}: must be > 0, not {!r}').format(name, key, value)
                )
        vi = None
        if entry['kind'] == 'ts-lat':
            vi = VIConfig(
                tol_epsilon=_or_default(entry, 'tol_epsilon', defaults.tol_epsilon),
                max_iter=_or_default(entry, 'max_iter', defaults.max_iter),
                init_mode=_or_default(entry, 'init_mode', defaults.init_mode),
            )
            try:
                must_verify_vi_config(vi)
            except ValidationError as err:
                problems.append(_('agents.{}: {}').format(name, err))
        agents.append(AgentSpec(
            kind=entry['kind'],
            label=entry['label'] or name,
            prior_alpha=prior_alpha,
            prior_beta=prior_beta,
            soft_start=entry['soft_start'],
            vi=vi,
        ))
    return agents


# ***

def _repr_list(values):
    return [repr(float(value)) for value in values]


def config_document(config):
    """Return the ``ConfigObj`` that ``parse_document`` reads back as ``config``.

    Floats are written with ``repr``, so every value survives the trip.
    """
    document = ConfigObj(encoding='utf-8')
    document['schema_version'] = SCHEMA_VERSION
    document['experiment'] = config.experiment

    environment = config.environment
    document['environment'] = {
        'label': environment.label,
        'context_probs': _repr_list(environment.context_probs),
    }
    for x in range(environment.num_contexts):
        context = {'mu': _repr_list(environment.reward.mu[x])}
        for row in range(environment.num_arms):
            context['pi_{}'.format(row)] = _repr_list(environment.compliance.pi[x][row])
        document['environment']['context_{}'.format(x)] = context

    document['run'] = {
        'horizon': int(config.horizon),
        'replications': int(config.replications),
        'seed': int(config.seed),
        'workers': int(config.workers),
        'output_dir': config.output_dir,
        'write_traces': bool(config.write_traces),
        'wall_time': bool(config.wall_time),
    }
    vi = config.vi or VIConfig()
    document['vi'] = {
        'tol_epsilon': repr(float(vi.tol_epsilon)),
        'max_iter': int(vi.max_iter),
        'init_mode': vi.init_mode,
    }

    document['agents'] = {}
    for spec in config.agents:
        name = spec_label(spec)
        if name in document['agents']:
            raise ValidationError(
                _('Two agents share the label ‘{}’; give each a unique label.')
                .format(name)
            )
        entry = {
            'kind': spec.kind,
            'label': name,
            'soft_start': int(spec.soft_start),
            'prior_alpha': repr(float(spec.prior_alpha)),
            'prior_beta': repr(float(spec.prior_beta)),
        }
        if spec.vi is not None:
            entry.update({
                'tol_epsilon': repr(float(spec.vi.tol_epsilon)),
                'max_iter': int(spec.vi.max_iter),
                'init_mode': spec.vi.init_mode,
            })
        document['agents'][name] = entry
    return document


def write_config(config, path):
    """Write ``config`` as an experiment document at ``path``."""
    document = config_document(config)
    document.filename = path
    document.write()
    return path
