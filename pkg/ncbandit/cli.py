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

"""The ``ncbandit`` command line.

Exit codes: 0 on success, 1 on a usage, validation, config, or I/O error,
and 2 when ``verify`` finds a counterexample.
"""

from gettext import gettext as _

import argparse
import logging
import os
import sys

from .control import BanditControl
from .harness.presets import (
    CB_COMPLIANCE,
    CB_SOFT_STARTS,
    IST_REWARDS,
    FULL_PRESETS,
    SWEEP_GRID_STEP,
    sweep_grid,
)
from .harness.replications import SUMMARY_HEADERS, WORKERS_ENVIRON
from .helpers.app_dirs import NCBanditAppDirs
from .helpers.errors import AcceptanceError, NCBanditError
from .helpers.logging import LIB_LOGGER_NAME, formatter_basic, setup_handler
from .reports.csv_writer import CSVWriter
from .reports.results import write_excess

__all__ = (
    'EXIT_ACCEPTANCE',
    'EXIT_ERROR',
    'EXIT_OK',
    'build_parser',
    'cli_main',
    'main',
)


logger = logging.getLogger(LIB_LOGGER_NAME)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ACCEPTANCE = 2


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Raises on bad arguments instead of exiting 2, which means ``verify`` failed."""

    def error(self, message):
        raise UsageError(message)


# ***

def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(_('not an integer: {!r}').format(text))
    if value < 1:
        raise argparse.ArgumentTypeError(_('must be ≥ 1, not {}').format(value))
    return value


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(_('not an integer: {!r}').format(text))
    if value < 0:
        raise argparse.ArgumentTypeError(_('must be ≥ 0, not {}').format(value))
    return value


def _env_ids(text):
    if text == 'all':
        return sorted(CB_COMPLIANCE)
    try:
        ids = [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(_('expected 1..4 or all, not {!r}').format(text))
    unknown = [env_id for env_id in ids if env_id not in CB_COMPLIANCE]
    if unknown:
        raise argparse.ArgumentTypeError(
            _('unknown environment(s): {}').format(', '.join(map(str, unknown)))
        )
    return ids


def _soft_starts(text):
    try:
        starts = [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(_('expected e.g. 0,40, not {!r}').format(text))
    if any(start < 0 for start in starts):
        raise argparse.ArgumentTypeError(_('soft starts must be ≥ 0'))
    return starts


def _reward_classes(text):
    text = text.lower()
    if text == 'all':
        return list(IST_REWARDS)
    if text not in IST_REWARDS:
        raise argparse.ArgumentTypeError(
            _('expected one of {} or all, not {!r}').format(', '.join(IST_REWARDS), text)
        )
    return [text]


def _add_run_arguments(parser, preset=True):
    if preset:
        parser.add_argument('--t', type=_positive_int, dest='horizon',
                            help=_('steps per episode'))
        parser.add_argument('--reps', type=_positive_int, dest='replications',
                            help=_('replications per agent'))
        parser.add_argument('--seed', type=_nonnegative_int, help=_('master seed'))
        parser.add_argument('--full', action='store_true',
                            help=_('use the full-scale horizon and replication counts'))
    parser.add_argument('--out', help=_('directory for the result files'))
    parser.add_argument('--traces', action='store_true',
                        help=_('also write every step of every replication'))


def build_parser():
    parser = ArgumentParser(
        prog='ncbandit',
        description=_('Thompson sampling under noncompliance: experiments and checks.'),
    )
    parser.add_argument('--log-level', help=_('library log level, e.g., INFO'))
    parser.add_argument('--color', action='store_true', help=_('colorize log lines'))
    parser.add_argument(
        '--workers', type=_positive_int,
        help=_('worker processes ({} overrides)').format(WORKERS_ENVIRON),
    )
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    sweep = commands.add_parser('sweep', help=_('two-arm compliance sweep'))
    _add_run_arguments(sweep)
    sweep.add_argument('--grid-step', type=float, default=SWEEP_GRID_STEP,
                       help=_('spacing of p over [0, 1]'))

    cb = commands.add_parser('cb', help=_('two-context environments 1 to 4'))
    _add_run_arguments(cb)
    cb.add_argument('--env', type=_env_ids, default=sorted(CB_COMPLIANCE),
                    help=_('1..4, a comma list, or all'))
    cb.add_argument('--m', type=_soft_starts, default=list(CB_SOFT_STARTS),
                    dest='soft_starts', help=_('ts-lat soft starts, e.g., 0,40'))

    ist = commands.add_parser('ist', help=_('six-arm stroke trial replay'))
    _add_run_arguments(ist)
    ist.add_argument('--class', type=_reward_classes, default=list(IST_REWARDS),
                     dest='reward_classes', help=_('sts, lts, ltr, or all'))

    verify = commands.add_parser('verify', help=_('check the regret-bound analytics'))
    verify.add_argument('--trials', type=_positive_int, default=10000)
    verify.add_argument('--seed', type=_nonnegative_int)

    run = commands.add_parser('run', help=_('run an experiment document'))
    run.add_argument('--config', required=True, dest='config_path')
    _add_run_arguments(run, preset=False)

    return parser


# ***

def _setup_logging(args):
    config = {'dev': {'color_logs': bool(args.color)}}
    if args.log_level:
        config['dev']['lib_log_level'] = args.log_level
    controller = BanditControl(config)
    handler = logging.StreamHandler(sys.stderr)
    setup_handler(handler, formatter_basic(color=args.color), controller.lib_logger)
    return controller, handler


def _preset_sizes(args, name):
    if not args.full:
        return args.horizon, args.replications
    preset = FULL_PRESETS[name]
    return (
        preset.horizon if args.horizon is None else args.horizon,
        preset.replications if args.replications is None else args.replications,
    )


def _output_dir(controller, args, name):
    if args.out:
        return args.out
    return os.path.join(controller.config['run.output_dir'], name)


def _print_summaries(result, stdout):
    writer = CSVWriter()
    writer.output_setup(stdout)
    writer.write_report(result.summaries(), SUMMARY_HEADERS)


def _run_sweep(controller, args, stdout):
    horizon, replications = _preset_sizes(args, 'sweep')
    result = controller.sweep(
        grid=sweep_grid(step=args.grid_step),
        horizon=horizon,
        replications=replications,
        seed=args.seed,
        workers=args.workers,
    )
    controller.write(result, _output_dir(controller, args, 'sweep'), args.traces)
    _print_summaries(result, stdout)
    return EXIT_OK


def _run_cb(controller, args, stdout):
    horizon, replications = _preset_sizes(args, 'cb')
    result = controller.cb(
        envs=args.env,
        soft_starts=args.soft_starts,
        horizon=horizon,
        replications=replications,
        seed=args.seed,
        workers=args.workers,
    )
    controller.write(result, _output_dir(controller, args, 'cb'), args.traces)
    _print_summaries(result, stdout)
    return EXIT_OK


def _run_ist(controller, args, stdout):
    horizon, replications = _preset_sizes(args, 'ist')
    base = _output_dir(controller, args, 'ist')
    for reward_class in args.reward_classes:
        report = controller.ist(
            reward_class,
            horizon=horizon,
            replications=replications,
            seed=args.seed,
            workers=args.workers,
        )
        directory = base
        if len(args.reward_classes) > 1:
            directory = os.path.join(base, reward_class)
        controller.write(report.result, directory, args.traces)
        write_excess(report, directory)
        for agent, excess in report.excess.items():
            stdout.write('{}\t{}\t{:.3f}\n'.format(reward_class, agent, excess))
    return EXIT_OK


def _run_verify(controller, args, stdout):
    report = controller.verify(num_trials=args.trials, seed=args.seed)
    for line in report.lines():
        stdout.write(line + '\n')
    report.must_pass()
    return EXIT_OK


def _run_document(controller, args, stdout):
    experiment, result = controller.run(args.config_path, workers=args.workers)
    controller.write(
        result,
        args.out or experiment.output_dir,
        args.traces or experiment.write_traces,
    )
    _print_summaries(result, stdout)
    return EXIT_OK


COMMANDS = {
    'sweep': _run_sweep,
    'cb': _run_cb,
    'ist': _run_ist,
    'verify': _run_verify,
    'run': _run_document,
}


def cli_main(argv=None, stdout=None, stderr=None):
    """Run one ``ncbandit`` command and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        stderr.write(parser.format_usage())
        stderr.write('ncbandit: error: {}\n'.format(err))
        return EXIT_ERROR
    except SystemExit as err:
        # --help.
        return EXIT_OK if not err.code else EXIT_ERROR

    NCBanditAppDirs('ncbandit')
    handler = None
    try:
        controller, handler = _setup_logging(args)
        return COMMANDS[args.command](controller, args, stdout)
    except AcceptanceError as err:
        logger.error(str(err))
        stderr.write(_('Verification failed: {}\n').format(err))
        return EXIT_ACCEPTANCE
    except ArithmeticError as err:
        logger.error(str(err))
        stderr.write(_('Numerical failure: {}\n').format(err))
        return EXIT_ACCEPTANCE
    except (NCBanditError, OSError, ValueError) as err:
        logger.error(str(err))
        stderr.write(_('Error: {}\n').format(err))
        return EXIT_ERROR
    finally:
        if handler is not None:
            logger.removeHandler(handler)


def main():
    sys.exit(cli_main())


if __name__ == '__main__':
    main()
