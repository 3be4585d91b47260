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
from configobj import ConfigObj

from ncbandit.config import decorate_config
from ncbandit.config.experiment import (
    config_document,
    config_schema,
    parse_config,
    parse_document,
    write_config,
)
from ncbandit.helpers.errors import ConfigFileError, ConfigSchemaError, ValidationError
from ncbandit.inference.variational import VIConfig
from ncbandit.tests.conftest import EXPERIMENT_DOCUMENT


def _document(text):
    return ConfigObj(text.splitlines())


def _problems(text):
    with pytest.raises(ConfigSchemaError) as excinfo:
        parse_document(_document(text))
    return excinfo.value.problems


class TestParseConfig(object):
    def test_reads_the_document(self, experiment_document):
        config = parse_config(experiment_document)
        assert config.experiment == 'doc'
        assert config.environment.label == 'p=0.20'
        assert config.environment.compliance.pi[0].tolist() == [[0.8, 0.2], [0.2, 0.8]]
        assert (config.horizon, config.replications, config.seed) == (30, 2, 5)
        assert config.workers == 1
        assert config.vi == VIConfig(1e-6, 100, 'warm')

    def test_agents(self, experiment_document):
        ts, lat = parse_config(experiment_document).agents
        assert (ts.kind, ts.label, ts.prior_alpha, ts.prior_beta) == ('ts', 'ts', 1.0, 2.0)
        assert ts.vi is None
        assert (lat.kind, lat.label, lat.soft_start) == ('ts-lat', 'ts-lat-10', 10)
        assert lat.vi == VIConfig(1e-5, 100, 'warm')

    def test_defaults_follow_settings(self, experiment_document):
        settings = decorate_config({'run': {'workers': 3}})
        assert parse_config(experiment_document, settings=settings).workers == 3

    def test_missing_file(self, tmpdir):
        with pytest.raises(ConfigFileError):
            parse_config(tmpdir.join('nope.ini').strpath)

    def test_unparseable_file(self, tmpdir):
        path = tmpdir.join('broken.ini')
        path.write('[environment\nlabel = x\n')
        with pytest.raises(ConfigFileError):
            parse_config(path.strpath)


class TestRoundTrip(object):
    def test_write_then_parse(self, experiment_config, tmpdir):
        path = write_config(experiment_config, tmpdir.join('config.ini').strpath)
        assert parse_config(path) == experiment_config

    def test_written_files_are_stable(self, experiment_document, tmpdir):
        config = parse_config(experiment_document)
        first = write_config(config, tmpdir.join('first.ini').strpath)
        second = write_config(parse_config(first), tmpdir.join('second.ini').strpath)
        with open(first) as left, open(second) as right:
            assert left.read() == right.read()

    def test_duplicate_labels(self, experiment_config, agent_specs):
        config = experiment_config._replace(agents=agent_specs + agent_specs[:1])
        with pytest.raises(ValidationError):
            config_document(config)


class TestSchemaProblems(object):
    def test_row_off_the_simplex_names_the_row(self):
        text = EXPERIMENT_DOCUMENT.replace('pi_1 = 0.2, 0.8', 'pi_1 = 0.2, 0.7')
        (problem, ) = _problems(text)
        assert 'row 1' in problem

    def test_rounded_row_is_accepted(self):
        text = EXPERIMENT_DOCUMENT.replace('pi_0 = 0.8, 0.2', 'pi_0 = 0.799, 0.2')
        config = parse_document(_document(text))
        assert config.environment.compliance.pi[0, 0].sum() == pytest.approx(1.0)

    def test_unknown_keys_and_sections(self):
        text = EXPERIMENT_DOCUMENT + '\n[extra]\nx = 1\n'
        text = text.replace('seed = 5', 'seed = 5\ncolour = red')
        problems = _problems(text)
        assert 'run.colour: unknown key or section' in problems
        assert 'extra: unknown key or section' in problems

    def test_every_problem_is_reported(self):
        text = EXPERIMENT_DOCUMENT.replace('horizon = 30', 'horizon = 0')
        text = text.replace('kind = ts\n', 'kind = eps-greedy\n')
        problems = _problems(text)
        assert len(problems) == 2
        assert any(problem.startswith('run.horizon') for problem in problems)
        assert any(problem.startswith('agents.ts.kind') for problem in problems)

    def test_oversized_seed_is_reported(self):
        text = EXPERIMENT_DOCUMENT.replace('seed = 5', 'seed = {}'.format(2 ** 64))
        (problem, ) = _problems(text)
        assert problem.startswith('run.seed')

    def test_missing_means(self):
        text = EXPERIMENT_DOCUMENT.replace('mu = 0.75, 0.25\n', '')
        assert 'environment.context_0.mu: missing' in _problems(text)

    def test_missing_compliance_row(self):
        text = EXPERIMENT_DOCUMENT.replace('pi_1 = 0.2, 0.8\n', '')
        (problem, ) = _problems(text)
        assert 'pi_0..pi_1' in problem

    def test_short_compliance_row(self):
        text = EXPERIMENT_DOCUMENT.replace('pi_1 = 0.2, 0.8', 'pi_1 = 0.2, 0.3, 0.5')
        (problem, ) = _problems(text)
        assert 'expected 2 entries' in problem

    def test_context_gap(self):
        text = EXPERIMENT_DOCUMENT.replace('[[context_0]]', '[[context_1]]')
        problems = _problems(text)
        assert any('without gaps' in problem for problem in problems)

    def test_no_agents(self):
        text = EXPERIMENT_DOCUMENT.split('[agents]')[0]
        assert 'agents: needs at least one [[name]] agent section' in _problems(text)

    def test_bad_agent_vi(self):
        text = EXPERIMENT_DOCUMENT.replace('tol_epsilon = 1e-5', 'tol_epsilon = 0.0')
        problems = _problems(text)
        assert any(problem.startswith('agents.ts-lat-10') for problem in problems)

    def test_newer_schema_version(self):
        text = EXPERIMENT_DOCUMENT.replace('schema_version = 1', 'schema_version = 2')
        assert any(problem.startswith('schema_version') for problem in _problems(text))


class TestConfigSchema(object):
    def test_defaults_come_from_settings(self):
        settings = decorate_config({'run': {'horizon': 77}})
        assert 'horizon = integer(min=1, default=77)' in config_schema(settings)
