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

import csv


class TestCSVWriter(object):
    def test_csv_writer_init(self, csv_writer, path):
        """Make sure that initialition provides us with a ``csv.writer`` instance."""
        assert csv_writer.csv_writer
        dialect = csv_writer.csv_writer.dialect
        excel = csv.get_dialect('excel')
        for attr in ('delimiter', 'quotechar', 'doublequote', 'quoting',
                     'skipinitialspace'):
            assert getattr(dialect, attr) == getattr(excel, attr)
        # Rows end in a bare newline, not the dialect's \r\n.
        assert dialect.lineterminator == '\n'

    def test_write_report(self, csv_writer, path):
        count = csv_writer.write_report(
            [('ts', 0, 1.5), ('ts, obs', 1, True)], ('agent', 'replication', 'final'),
        )
        assert count == 2
        with open(path, newline='') as csv_file:
            assert csv_file.read() == (
                'agent,replication,final\n'
                'ts,0,1.5\n'
                '"ts, obs",1,true\n'
            )

    def test_empty_table_writes_headers(self, csv_writer, path, headers):
        assert csv_writer.write_report([], headers) == 0
        with open(path) as csv_file:
            assert csv_file.read() == ','.join(headers) + '\n'
