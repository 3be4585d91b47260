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

"""Base class of the result file writers."""

import math
import sys

__all__ = (
    'FLOAT_FORMAT',
    'ReportWriter',
)


# 17 significant digits reproduce every double exactly.
FLOAT_FORMAT = '%.17g'


class ReportWriter(object):
    def __init__(self, output_b=False):
        """
        Args:
            output_b: Whether to open a ``path`` for binary output.
        """
        self.output_b = output_b
        self.output_file = None
        self.output_ours = False
        self.row_limit = 0
        self.float_format = FLOAT_FORMAT

    # ***

    def output_setup(self, output_obj, row_limit=0, float_format=None):
        """Open ``output_obj`` (a path, a file-like object, or None for stdout)."""
        self.output_file = self.open_output_file(output_obj, self.output_b)
        self.row_limit = row_limit or 0
        if float_format is not None:
            self.float_format = float_format

    def open_output_file(self, output_obj, output_b=False):
        self.output_ours = False
        if not output_obj:
            return sys.stdout
        elif not isinstance(output_obj, str):
            return output_obj
        return self.open_file(output_obj, output_b)

    def open_file(self, path, output_b=False, newline=None):
        self.output_ours = True
        if not output_b:
            return open(path, 'w', encoding='utf-8', newline=newline)
        return open(path, 'wb')

    # ***

    def format_value(self, value):
        """Return ``value`` as text, the same way on every platform and locale."""
        if isinstance(value, bool):
            return 'true' if value else 'false'
        if isinstance(value, int):
            return str(value)
        if isinstance(value, float):
            if math.isnan(value):
                return 'nan'
            # %-formatting ignores the locale, unlike format(value, 'n').
            return self.float_format % value
        try:
            # numpy scalars.
            return self.format_value(value.item())
        except AttributeError:
            return str(value)

    # ***

    def write_report(self, table, headers):
        """Write every row of ``table`` (up to ``row_limit``), then close.

        Returns:
            int: The number of rows written.
        """
        try:
            return self.write_report_table(table, headers)
        finally:
            self._close()

    def write_report_table(self, table, headers):
        n_written = 0
        for row in table:
            self._write_result(row, headers)
            n_written += 1
            if self.row_limit > 0 and n_written >= self.row_limit:
                break
        return n_written

    def _write_result(self, row, headers):
        raise NotImplementedError

    # ***

    def _close(self):
        if self.output_ours:
            self.output_file.close()
        # Leave the handle set, so the caller can inspect it.
