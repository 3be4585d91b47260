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

"""Numerical checks of the regret-bound analytics.

Each check samples its own cases from a seeded stream and collects every
counterexample it finds:

- ``compliance_never_helps``: any 2×2 compliance matrix moves the leading
  term of the bound up (Δ ≥ 0) for a compliance-unaware agent.
- ``collapse_signs``: for K ≥ 3 distinct means, collapsing every proposal
  onto the runner-up raises the leading term, and collapsing onto the
  best arm zeroes it.
- ``gradient_signs``: on a grid of the domain of f, the closed-form
  gradient has ∂f/∂μ₁ ≤ 0 and ∂f/∂μᵢ ≥ 0, and matches central
  differences.
- ``kl_upper_bound``: D_KL(p ‖ q) ≤ Σ p²/q − 1 on random simplex pairs.
"""

from gettext import gettext as _

import logging
import math
from collections import OrderedDict, namedtuple

import numpy as np

from ..helpers.dev.profiling import TimeWith
from ..helpers.errors import AcceptanceError
from ..helpers.samplers import RngStream, sample_dirichlet
from ..special.bounds import (
    BernoulliPair,
    BoundParams,
    collapse_matrix,
    delta_bound,
    f_bound,
    grad_f,
)
from ..special.functions import kl_pmf, kl_upper_bound

__all__ = (
    'CheckResult',
    'TheoremReport',
    'check_collapse_signs',
    'check_compliance_never_helps',
    'check_gradient_signs',
    'check_kl_upper_bound',
    'verify_theorems',
)


logger = logging.getLogger('ncbandit.log')

SIGN_TOLERANCE = 1e-12

GRID_POINTS = 50
GRID_LOW, GRID_HIGH = 0.01, 0.99
FD_STEP = 1e-6
FD_RELATIVE_TOLERANCE = 1e-4

MEANS_LOW, MEANS_HIGH = 0.01, 0.99

COLLAPSE_ARMS = (3, 4, 5, 6)
COLLAPSE_TRIALS = 100

KL_DIMS = (2, 8)
KL_Q_FLOOR = 1e-3

# ln T = 1, so Δ is the change of the f-sum itself.
UNIT_LOG_HORIZON = BoundParams(horizon=math.e, epsilon=0.0)

# Enough to debug a failure without flooding the report.
MAX_COUNTEREXAMPLES = 20

CheckResult = namedtuple(
    'CheckResult',
    ('name', 'trials', 'violations', 'counterexamples', 'elapsed', 'notes'),
)


class TheoremReport(object):
    """The outcome of every check, in the order they ran."""

    def __init__(self, seed, checks=()):
        self.seed = seed
        self.checks = OrderedDict((check.name, check) for check in checks)

    def __repr__(self):
        return 'TheoremReport(seed={}, passed={}, checks={})'.format(
            self.seed, self.passed, list(self.checks),
        )

    @property
    def passed(self):
        return all(not check.violations for check in self.checks.values())

    def counterexamples(self):
        return [
            '{}: {}'.format(check.name, example)
            for check in self.checks.values()
            for example in check.counterexamples
        ]

    def lines(self):
        for check in self.checks.values():
            yield _('{name}: {status} ({violations} of {trials} violated, {elapsed:.3f} s)'
                    ).format(
                name=check.name,
                status=_('ok') if not check.violations else _('FAILED'),
                violations=check.violations,
                trials=check.trials,
                elapsed=check.elapsed,
            )
            for note in check.notes:
                yield '  {}'.format(note)
            for example in check.counterexamples:
                yield '  ! {}'.format(example)

    def must_pass(self):
        if not self.passed:
            raise AcceptanceError(
                _('{} of {} checks found counterexamples.').format(
                    sum(1 for check in self.checks.values() if check.violations),
                    len(self.checks),
                ),
                self.counterexamples(),
            )
        return self


class _Tally(object):

    def __init__(self, name):
        self.name = name
        self.trials = 0
        self.violations = 0
        self.counterexamples = []
        self.notes = []

    def record(self, ok, describe):
        self.trials += 1
        if ok:
            return
        self.violations += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(describe())

    def result(self, timer):
        if self.violations:
            logger.warning('{}: {} violation(s) in {} trials'.format(
                self.name, self.violations, self.trials,
            ))
        return CheckResult(
            self.name,
            self.trials,
            self.violations,
            self.counterexamples,
            timer.elapsed,
            self.notes,
        )


def _random_means(rng, size):
    return MEANS_LOW + (MEANS_HIGH - MEANS_LOW) * rng.uniform(size)


# ***

def check_compliance_never_helps(rng, num_trials):
    tally = _Tally('compliance_never_helps')
    with TimeWith(tally.name) as timer:
        for _trial in range(num_trials):
            mu = _random_means(rng, 2)
            stay = rng.uniform(2)
            pi = np.array([[stay[0], 1.0 - stay[0]], [1.0 - stay[1], stay[1]]])
            delta = delta_bound(mu, pi, UNIT_LOG_HORIZON)
            tally.record(
                delta >= -SIGN_TOLERANCE,
                lambda: 'mu={} pi={} delta={!r}'.format(mu.tolist(), pi.tolist(), delta),
            )
    return tally.result(timer)


def check_collapse_signs(rng, num_trials=COLLAPSE_TRIALS, arm_counts=COLLAPSE_ARMS):
    tally = _Tally('collapse_signs')
    min_positive = 0
    with TimeWith(tally.name) as timer:
        for num_arms in arm_counts:
            for _trial in range(num_trials):
                mu = _random_means(rng, num_arms)
                if np.unique(mu).size != num_arms:
                    continue
                raised = delta_bound(
                    mu, collapse_matrix(mu, 'runner_up'), UNIT_LOG_HORIZON,
                )
                tally.record(
                    raised > 0.0,
                    lambda: 'runner_up K={} mu={} delta={!r}'.format(
                        num_arms, mu.tolist(), raised,
                    ),
                )
                zeroed = delta_bound(mu, collapse_matrix(mu, 'max'), UNIT_LOG_HORIZON)
                tally.record(
                    zeroed < 0.0,
                    lambda: 'max K={} mu={} delta={!r}'.format(
                        num_arms, mu.tolist(), zeroed,
                    ),
                )
                lowered = delta_bound(mu, collapse_matrix(mu, 'min'), UNIT_LOG_HORIZON)
                min_positive += int(lowered > 0.0)
    tally.notes.append(
        _('collapsing onto the worst arm raised the bound in {} case(s)')
        .format(min_positive)
    )
    return tally.result(timer)


def _central_difference(mu1, mui, wrt):
    if wrt == 'mu1':
        ahead, behind = BernoulliPair(mu1 + FD_STEP, mui), BernoulliPair(mu1 - FD_STEP, mui)
    else:
        ahead, behind = BernoulliPair(mu1, mui + FD_STEP), BernoulliPair(mu1, mui - FD_STEP)
    return (f_bound(ahead) - f_bound(behind)) / (2.0 * FD_STEP)


def _relative_error(estimate, exact):
    return abs(estimate - exact) / max(abs(exact), SIGN_TOLERANCE)


def check_gradient_signs(points=GRID_POINTS):
    tally = _Tally('gradient_signs')
    grid = np.linspace(GRID_LOW, GRID_HIGH, points)
    with TimeWith(tally.name) as timer:
        for mu1 in grid:
            for mui in grid[grid < mu1]:
                # Keep both difference points off the diagonal.
                if mu1 - mui <= 2.0 * FD_STEP:
                    continue
                gradient = grad_f(BernoulliPair(mu1, mui))
                fd_mu1 = _central_difference(mu1, mui, 'mu1')
                fd_mui = _central_difference(mu1, mui, 'mui')
                tally.record(
                    gradient.d_mu1 <= SIGN_TOLERANCE
                    and gradient.d_mui >= -SIGN_TOLERANCE
                    and _relative_error(fd_mu1, gradient.d_mu1) <= FD_RELATIVE_TOLERANCE
                    and _relative_error(fd_mui, gradient.d_mui) <= FD_RELATIVE_TOLERANCE,
                    lambda: 'mu1={!r} mui={!r} grad={} fd=({!r}, {!r})'.format(
                        mu1, mui, tuple(gradient), fd_mu1, fd_mui,
                    ),
                )
    return tally.result(timer)


def _floored_simplex(rng, size, floor):
    return floor + (1.0 - size * floor) * sample_dirichlet(rng, np.ones(size))


def check_kl_upper_bound(rng, num_trials):
    tally = _Tally('kl_upper_bound')
    low, high = KL_DIMS
    with TimeWith(tally.name) as timer:
        for _trial in range(num_trials):
            size = low + rng.integers(high - low + 1)
            p = sample_dirichlet(rng, np.ones(size))
            q = _floored_simplex(rng, size, KL_Q_FLOOR)
            divergence = kl_pmf(p, q)
            bound = kl_upper_bound(p, q)
            tally.record(
                divergence <= bound + SIGN_TOLERANCE,
                lambda: 'p={} q={} kl={!r} bound={!r}'.format(
                    p.tolist(), q.tolist(), divergence, bound,
                ),
            )
    return tally.result(timer)


# ***

def verify_theorems(num_trials=10000, seed=1):
    """Run every check and return a ``TheoremReport``.

    ``num_trials`` sets the sample count of the random-case checks; the
    collapse check runs a fixed 100 cases per arm count, and the gradient
    check a fixed grid. Call ``must_pass()`` on the report to raise an
    ``AcceptanceError`` carrying the counterexamples.
    """
    rng = RngStream(seed)
    logger.info('Verifying bound analytics (trials={}, seed={})'.format(num_trials, seed))
    return TheoremReport(seed, (
        check_compliance_never_helps(rng.spawn(0), num_trials),
        check_collapse_signs(rng.spawn(1)),
        check_gradient_signs(),
        check_kl_upper_bound(rng.spawn(2), num_trials),
    ))
