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

"""Log level names accepted by the config and the ``--log-level`` option."""

from gettext import gettext as _

import logging

__all__ = (
    'LOG_LEVELS',
    'get_log_level_safe',
    'get_log_name_safe',
    'log_level_choices',
    'must_verify_log_level',
)


LOG_LEVELS = {
    'debug': logging.DEBUG,
    'info': logging.INFO,
    'warning': logging.WARNING,
    'error': logging.ERROR,
    'critical': logging.CRITICAL,
}


def log_level_choices():
    return tuple(LOG_LEVELS)


def must_verify_log_level(level_name):
    """Return the numeric level for ``level_name`` (any case), or raise ValueError."""
    if isinstance(level_name, int):
        if level_name not in LOG_LEVELS.values():
            raise ValueError(_('Unknown numeric log level: {}').format(level_name))
        return level_name
    try:
        return LOG_LEVELS[level_name.lower()]
    except (AttributeError, KeyError):
        raise ValueError(
            _('Unrecognized log level “{}”. Try one of: ‘{}’.')
            .format(level_name, '’, ‘'.join(LOG_LEVELS))
        )


def get_log_level_safe(level_name):
    try:
        return must_verify_log_level(level_name)
    except ValueError:
        return logging.WARNING


def get_log_name_safe(level):
    return logging.getLevelName(level)
