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

"""The files an experiment leaves behind.

- ``results.csv``: one row per successful (agent, replication).
- ``summary.csv``: one row per (label, agent).
- ``manifest.json``: code version, master seed, configs, failures, flags.
- ``config.ini`` (or ``config-<label>.ini`` per environment): the
  configuration echoed as an experiment document.
- ``traces.csv``: every step's cumulative regret, when asked for.

Nothing written depends on wall time unless ``wall_time`` was enabled,
so two runs of one config give byte-identical files.
"""

from gettext import gettext as _

import logging
import os
import re

from .. import get_version
from ..config.experiment import SCHEMA_VERSION, config_document, write_config
from ..harness.replications import RESULT_HEADERS, SUMMARY_HEADERS
from ..helpers.app_dirs import ensure_directory_exists
from .csv_writer import CSVWriter
from .json_writer import JSONWriter

__all__ = (
    'RESULTS_FILE',
    'SUMMARY_FILE',
    'MANIFEST_FILE',
    'TRACES_FILE',
    'TRACE_HEADERS',
    'EXCESS_FILE',
    'EXCESS_HEADERS',
    'config_filename',
    'manifest_document',
    'write_excess',
    'write_results',
)


logger = logging.getLogger('ncbandit.log')

RESULTS_FILE = 'results.csv'
SUMMARY_FILE = 'summary.csv'
MANIFEST_FILE = 'manifest.json'
TRACES_FILE = 'traces.csv'

TRACE_HEADERS = ('experiment', 'label', 'agent', 'replication', 'step', 'cumulative_regret')


def config_filename(config, count):
    if count == 1:
        return 'config.ini'
    safe = re.sub(r'[^\w.=+-]', '_', config.environment.label or 'environment')
    return 'config-{}.ini'.format(safe)


def _trace_rows(result):
    for trace in result.successes():
        for step, regret in enumerate(trace.cumulative, start=1):
            yield (
                result.experiment, trace.label, trace.agent, trace.replication,
                step, float(regret),
            )


def manifest_document(result, files):
    """Return the manifest: enough to replay ``result`` bit for bit."""
    configs = result.configs
    return {
        'experiment': result.experiment,
        'schema_version': SCHEMA_VERSION,
        'version': get_version(),
        'seed': int(configs[0].seed) if configs else None,
        'configs': [
            {
                'file': config_filename(config, len(configs)),
                'document': config_document(config).dict(),
            }
            for config in configs
        ],
        'replications': len(result.traces),
        'failures': [
            {
                'label': trace.label,
                'agent': trace.agent,
                'replication': trace.replication,
                'seed': trace.seed,
                'error': trace.error,
            }
            for trace in result.failures()
        ],
        'flags': list(result.flags),
        'files': sorted(files),
    }


def _write_csv(path, rows, headers):
    writer = CSVWriter()
    writer.output_setup(path)
    return writer.write_report(rows, headers)


def write_results(result, directory, write_traces=False):
    """Write the files of ``result`` into ``directory``; return their paths.

    ``result`` is an ``ExperimentResult`` whose ``configs`` are echoed.
    Raises ``OSError`` if the directory or a file cannot be written.
    """
    ensure_directory_exists(directory)
    paths = []

    def _path(name):
        path = os.path.join(directory, name)
        paths.append(path)
        return path

    _write_csv(_path(RESULTS_FILE), result.records(), RESULT_HEADERS)
    _write_csv(_path(SUMMARY_FILE), result.summaries(), SUMMARY_HEADERS)
    if write_traces:
        _write_csv(_path(TRACES_FILE), _trace_rows(result), TRACE_HEADERS)
    for config in result.configs:
        write_config(config, _path(config_filename(config, len(result.configs))))

    manifest_path = _path(MANIFEST_FILE)
    writer = JSONWriter()
    writer.output_setup(manifest_path)
    writer.write_document(
        manifest_document(result, [os.path.basename(path) for path in paths])
    )
    logger.info(_('Wrote {} file(s) to {}').format(len(paths), directory))
    return paths


EXCESS_FILE = 'excess.csv'

EXCESS_HEADERS = ('reward_class', 'agent', 'excess_successes')


def write_excess(report, directory):
    """Write an ``ExcessSuccessReport`` as ``excess.csv``; return its path."""
    ensure_directory_exists(directory)
    path = os.path.join(directory, EXCESS_FILE)
    rows = [
        (report.reward_class, agent, excess)
        for agent, excess in report.excess.items()
    ]
    _write_csv(path, rows, EXCESS_HEADERS)
    return path
