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

"""Console log formatting and library logger levels."""

from gettext import gettext as _

import logging

from ansi_escape_room import attr, fg

__all__ = (
    'LIB_LOGGER_NAME',
    'formatter_basic',
    'resolve_log_level',
    'set_logger_level',
    'setup_handler',
)


LIB_LOGGER_NAME = 'ncbandit.log'


def formatter_basic(color=False):
    if not color:
        return formatter_basic_plain()
    return formatter_basic_color()


def formatter_basic_plain():
    return logging.Formatter(
        '[%(levelname)s] %(asctime)s %(name)s %(funcName)s: %(message)s'
    )


def formatter_basic_color():
    return logging.Formatter(
        '{grey}[{underlined}{magenta}%(levelname)s{reset}{grey}]{reset} '
        '{yellow}%(asctime)s{reset} '
        '{light_blue}%(name)s %(funcName)s{reset}: '
        '{bold}%(message)s{reset}'.format(
            # RGB, not 'grey_54': some terminals mangle the 256-color index.
            grey=fg('#8a8a8a'),
            underlined=attr('underlined'),
            magenta=fg('magenta'),
            reset=attr('reset'),
            yellow=fg('yellow'),
            light_blue=fg('light_blue'),
            bold=attr('bold'),
        )
    )


def resolve_log_level(level):
    """Return ``(level_int, unknown)`` for a level name or number."""
    try:
        return int(level), False
    except (TypeError, ValueError):
        pass
    resolved = logging.getLevelName(str(level).upper())
    if isinstance(resolved, int):
        return resolved, False
    return logging.WARNING, True


def set_logger_level(logger_name, logger_log_level):
    logger = logging.getLogger(logger_name)
    if not any(isinstance(hdlr, logging.NullHandler) for hdlr in logger.handlers):
        logger.addHandler(logging.NullHandler())

    log_level, unknown = resolve_log_level(logger_log_level)
    logger.setLevel(log_level)
    if unknown:
        logger.warning(
            _('Unknown log_level specified for ‘{}’: {}')
            .format(logger_name, logger_log_level)
        )
    return logger


def setup_handler(handler, formatter, *loggers):
    handler.setFormatter(formatter)
    for logger in loggers:
        logger.addHandler(handler)
