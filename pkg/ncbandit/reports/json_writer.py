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

"""JSON writer for the run manifest."""

import json

from .report_writer import ReportWriter

__all__ = (
    'JSONWriter',
)


class JSONWriter(ReportWriter):
    """Writes one JSON document, keys sorted, so equal runs give equal bytes."""

    def __init__(self, indent=2):
        super(JSONWriter, self).__init__()
        self.indent = indent

    def write_document(self, document):
        try:
            json.dump(
                document,
                self.output_file,
                indent=self.indent,
                sort_keys=True,
                ensure_ascii=False,
                default=self.format_value,
            )
            self.output_file.write('\n')
        finally:
            self._close()
        return 1

