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

from ncbandit.reports.plaintext_writer import PlaintextWriter


class TestPlaintextWriter(object):
    def test_plaintext_writer_init(self, plaintext_writer):
        assert plaintext_writer.csv_writer
        assert plaintext_writer.fmtparams['lineterminator'] == '\n'

    def test_write_report_table(self, plaintext_writer, path, table, headers):
        plaintext_writer.write_report(table, headers)
        with open(path, newline='') as csv_file:
            rows = list(csv.reader(csv_file))
        assert rows[0] == headers
        assert rows[1:] == table

    def test_custom_delimiter(self, path):
        writer = PlaintextWriter(delimiter='\t')
        writer.output_setup(path)
        writer.write_report([(1, 0.5)], ('n', 'x'))
        with open(path) as text_file:
            assert text_file.read() == 'n\tx\n1\t0.5\n'
