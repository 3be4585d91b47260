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

"""Wall-clock timing for replications and verification checks."""

import logging
import time

__all__ = (
    'TimeWith',
    'timefunc',
)


logger = logging.getLogger('ncbandit.log')


def timefunc(func):
    """Log how long each call to ``func`` took, at debug level."""
    def f_timer(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        logger.debug('{0}: {1:.3f} secs.'.format(
            func.__name__, time.perf_counter() - start,
        ))
        return result

    f_timer.__name__ = func.__name__
    f_timer.__doc__ = func.__doc__
    return f_timer


class TimeWith():
    """A context manager stopwatch; ``elapsed`` is in seconds."""

    def __init__(self, name='', start=None):
        self.name = name
        self.start = time.perf_counter() if start is None else start
        self.stop = None

    @property
    def elapsed(self):
        end = self.stop if self.stop is not None else time.perf_counter()
        return end - self.start

    @property
    def elapsed_ms(self):
        return int(round(self.elapsed * 1000))

    def checkpoint(self, name=''):
        logger.debug('{timer} {checkpoint}: {elapsed:.3f} secs.'.format(
            timer=self.name,
            checkpoint=name,
            elapsed=self.elapsed,
        ).strip())

    def __enter__(self):
        return self

    def __exit__(self, type, value, traceback):
        self.stop = time.perf_counter()
        self.checkpoint('finished')
