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

from ncbandit.helpers.errors import (
    AcceptanceError,
    AgentStateError,
    ConfigError,
    ConfigSchemaError,
    DomainError,
    NCBanditError,
    ValidationError,
)


class TestErrorHierarchy(object):
    @pytest.mark.parametrize('error_cls, builtin', (
        (ValidationError, ValueError),
        (DomainError, ValueError),
        (AgentStateError, RuntimeError),
        (AcceptanceError, AssertionError),
    ))
    def test_builtin_bases(self, error_cls, builtin):
        assert issubclass(error_cls, NCBanditError)
        assert issubclass(error_cls, builtin)

    def test_domain_is_validation(self):
        assert issubclass(DomainError, ValidationError)


class TestConfigError(object):
    def test_message_lists_every_problem(self):
        error = ConfigSchemaError('Bad document', ['first', 'second'])
        assert isinstance(error, ConfigError)
        assert error.problems == ['first', 'second']
        assert str(error) == 'Bad document\n  - first\n  - second'

    def test_without_problems(self):
        error = ConfigError('Missing file')
        assert error.problems == []
        assert str(error) == 'Missing file'


class TestAcceptanceError(object):
    def test_keeps_counterexamples(self):
        error = AcceptanceError('Theorem failed', [{'mu': [0.5, 0.4]}])
        assert error.counterexamples == [{'mu': [0.5, 0.4]}]

    def test_defaults_to_empty(self):
        assert AcceptanceError('x').counterexamples == []
