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

"""This module provides the ncbandit exception hierarchy."""

__all__ = (
    'NCBanditError',
    'ValidationError',
    'DomainError',
    'AgentStateError',
    'ConfigError',
    'ConfigFileError',
    'ConfigSchemaError',
    'AcceptanceError',
    'InternalError',
)


class NCBanditError(Exception):
    """Base class for every error ncbandit raises on purpose."""
    pass


class ValidationError(NCBanditError, ValueError):  # noqa: E302
    """Raised if an argument fails its precondition (range, shape, simplex)."""
    pass


class DomainError(ValidationError):  # noqa: E302
    """Raised if a math function is evaluated outside its domain."""
    pass


class AgentStateError(NCBanditError, RuntimeError):  # noqa: E302
    """Raised if an agent is used before ``standup`` or without a stream."""
    pass


class ConfigError(NCBanditError):  # noqa: E302
    """Raised if an experiment document cannot be turned into a config.

    The ``problems`` attribute lists every violation found, not just the first.
    """

    def __init__(self, message, problems=None):
        super(ConfigError, self).__init__(message)
        self.problems = list(problems or [])

    def __str__(self):
        if not self.problems:
            return super(ConfigError, self).__str__()
        return '{}\n  - {}'.format(
            super(ConfigError, self).__str__(), '\n  - '.join(self.problems),
        )


class ConfigFileError(ConfigError):  # noqa: E302
    """Raised if the experiment document is missing or unreadable."""
    pass


class ConfigSchemaError(ConfigError):  # noqa: E302
    """Raised if the experiment document violates the schema."""
    pass


class AcceptanceError(NCBanditError, AssertionError):  # noqa: E302
    """Raised if a theorem or acceptance check finds a counterexample."""

    def __init__(self, message, counterexamples=None):
        super(AcceptanceError, self).__init__(message)
        self.counterexamples = list(counterexamples or [])


class InternalError(NCBanditError):  # noqa: E302
    """Raised on states the algorithms rule out (e.g., a softmax row of zeros)."""
    pass
