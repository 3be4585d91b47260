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

"""Plot mean final regret per agent from an ncbandit ``summary.csv``.

Usage::

    python docs/examples/plot_summary.py sweep/summary.csv --out sweep.png
"""

import argparse
import csv
from collections import OrderedDict

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def read_summary(path):
    """Return {agent: [(label, mean, std), ...]} in file order."""
    series = OrderedDict()
    with open(path, newline='') as summary_file:
        for row in csv.DictReader(summary_file):
            if not int(row['n']):
                continue
            series.setdefault(row['agent'], []).append(
                (row['label'], float(row['mean']), float(row['std'])),
            )
    return series


def plot_summary(series, title=''):
    labels = list(OrderedDict.fromkeys(
        label for points in series.values() for label, _mean, _std in points
    ))
    positions = np.arange(len(labels))
    width = 0.8 / max(len(series), 1)

    fig, ax = plt.subplots(figsize=(max(6, len(labels) * 0.6), 5))
    for offset, (agent, points) in enumerate(series.items()):
        by_label = {label: (mean, std) for label, mean, std in points}
        means = [by_label.get(label, (np.nan, 0.0))[0] for label in labels]
        stds = [by_label.get(label, (np.nan, 0.0))[1] for label in labels]
        ax.bar(positions + offset * width, means, width, yerr=stds, capsize=2, label=agent)

    ax.set_xticks(positions + width * (len(series) - 1) / 2)
    ax.set_xticklabels(labels, rotation=45, ha='right')
    ax.set_ylabel('final cumulative regret')
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    return fig


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument('summary', help='path to summary.csv')
    parser.add_argument('--out', default='summary.png')
    parser.add_argument('--title', default='')
    args = parser.parse_args()

    fig = plot_summary(read_summary(args.summary), title=args.title)
    fig.savefig(args.out, dpi=150, bbox_inches='tight')
    plt.close(fig)


if __name__ == '__main__':
    main()
