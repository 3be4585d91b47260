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

"""Leading-term analytics of the problem-dependent Thompson sampling regret bound.

The bound for a K-armed Bernoulli bandit with ordered means μ₁ ≥ μᵢ reads

    (1 + ε) Σᵢ f(μ₁, μᵢ) ln T + O(K / ε)

where f(μ₁, μᵢ) = (μ₁ - μᵢ) / D_KL(μᵢ ‖ μ₁). Only the leading term is
computed here; the additive constant is never evaluated.

Noncompliance shifts the rewards seen by a compliance-unaware agent from
μ to Π·μ, so ``delta_bound`` reports how much that shift moves the
leading term.
"""

from gettext import gettext as _

import math
from collections import namedtuple

import numpy as np

from ..helpers.errors import DomainError, ValidationError
from .functions import bernoulli_kl, check_simplex

__all__ = (
    'BOUNDARY_EXCLUSION',
    'BernoulliPair',
    'BoundParams',
    'FGradient',
    'COLLAPSE_MODES',
    'bound_leading_term',
    'collapse_matrix',
    'delta_bound',
    'descending',
    'f_bound',
    'grad_f',
)


BOUNDARY_EXCLUSION = 1e-12

BernoulliPair = namedtuple('BernoulliPair', ('mu1', 'mui'))

BoundParams = namedtuple('BoundParams', ('horizon', 'epsilon'))
BoundParams.__new__.__defaults__ = (0.0, )

FGradient = namedtuple('FGradient', ('d_mu1', 'd_mui'))

COLLAPSE_MODES = ('max', 'runner_up', 'min')


def _must_be_interior(value, name):
    if not (BOUNDARY_EXCLUSION <= value <= 1.0 - BOUNDARY_EXCLUSION):
        raise DomainError(
            _('‘{}’ must lie in (0, 1) away from the boundary, not: {!r}')
            .format(name, value)
        )


def _must_be_in_dom_f(pair):
    mu1, mui = (float(value) for value in pair)
    _must_be_interior(mu1, 'mu1')
    _must_be_interior(mui, 'mui')
    if mu1 < mui:
        raise DomainError(
            _('f is only defined for mu1 ≥ mui, not ({!r}, {!r})').format(mu1, mui)
        )
    return mu1, mui


def _divergence(p, q):
    divergence = bernoulli_kl(p, q)
    if divergence == 0.0:
        # Only reachable once the gap itself underflows.
        raise DomainError(
            _('D_KL({!r} ‖ {!r}) underflows to zero; the arms are numerically tied.')
            .format(p, q)
        )
    return divergence


def f_bound(pair):
    """Return f(μ₁, μᵢ) = (μ₁ - μᵢ) / D_KL(μᵢ ‖ μ₁), with f(x, x) = 0."""
    mu1, mui = _must_be_in_dom_f(pair)
    if mu1 == mui:
        return 0.0
    return (mu1 - mui) / _divergence(mui, mu1)


def grad_f(pair):
    """Return the closed-form gradient of ``f_bound`` at an interior point.

    ∂f/∂μᵢ = D_KL(μ₁ ‖ μᵢ) / D_KL(μᵢ ‖ μ₁)², and ∂f/∂μ₁ follows from the
    quotient rule: 1/D + (μ₁ - μᵢ)(μᵢ/μ₁ - (1 - μᵢ)/(1 - μ₁)) / D².
    """
    mu1, mui = _must_be_in_dom_f(pair)
    if mu1 == mui:
        raise DomainError(
            _('The gradient of f is undefined on the diagonal mu1 = mui = {!r}')
            .format(mu1)
        )
    forward = _divergence(mui, mu1)
    backward = bernoulli_kl(mu1, mui)
    d_mui = backward / (forward * forward)
    d_mu1 = (
        1.0 / forward
        + (mu1 - mui) * (mui / mu1 - (1.0 - mui) / (1.0 - mu1)) / (forward * forward)
    )
    return FGradient(d_mu1=d_mu1, d_mui=d_mui)


# ***

def descending(mu):
    """Return a descending copy of ``mu``; equal entries keep their order."""
    mu = np.asarray(mu, dtype=float)
    order = np.argsort(-mu, kind='stable')
    return mu[order]


def _must_verify_params(params):
    horizon, epsilon = params
    if not (horizon >= 1.0) or not math.isfinite(horizon):
        raise ValidationError(_('The horizon T must be ≥ 1, not: {!r}').format(horizon))
    if not (epsilon >= 0.0) or not math.isfinite(epsilon):
        raise ValidationError(_('The slack ε must be ≥ 0, not: {!r}').format(epsilon))
    return float(horizon), float(epsilon)


def _must_verify_means(mu):
    mu = np.asarray(mu, dtype=float)
    if mu.ndim != 1 or mu.size < 2:
        raise ValidationError(_('Expected at least two arm means, not: {}').format(mu))
    if np.any(mu <= 0.0) or np.any(mu >= 1.0) or not np.all(np.isfinite(mu)):
        raise ValidationError(
            _('Arm means must lie strictly inside (0, 1): {}').format(mu.tolist())
        )
    return mu


def bound_leading_term(mu, params):
    """Return (1 + ε) Σ_{i≥2} f(μ₍₁₎, μ₍ᵢ₎) ln T over the sorted means."""
    mu = _must_verify_means(mu)
    horizon, epsilon = _must_verify_params(params)
    ordered = descending(mu)
    total = sum(
        f_bound(BernoulliPair(ordered[0], mui)) for mui in ordered[1:]
    )
    return (1.0 + epsilon) * total * math.log(horizon)


def _must_verify_compliance(pi, num_arms):
    pi = np.asarray(pi, dtype=float)
    if pi.shape != (num_arms, num_arms):
        raise ValidationError(
            _('Expected a {0}×{0} compliance matrix, not shape {1}.')
            .format(num_arms, pi.shape)
        )
    for row in pi:
        check_simplex(row, 'Π row')
    return pi


def delta_bound(mu, pi, params):
    """Return the change in the leading term when μ is observed as Π·μ."""
    mu = _must_verify_means(mu)
    pi = _must_verify_compliance(pi, mu.size)
    observed = pi.dot(mu)
    if np.any(observed <= 0.0) or np.any(observed >= 1.0):
        raise DomainError(
            _('Π·μ touches the boundary of (0, 1): {}').format(observed.tolist())
        )
    return bound_leading_term(observed, params) - bound_leading_term(mu, params)


def collapse_matrix(mu, mode):
    """Return a row-selection compliance matrix that collapses the arms of ``mu``.

    - ``'max'``: every proposal implements the best arm, so Π·μ = (max μ, ...).
    - ``'runner_up'``: the best arm is kept, every other proposal implements
      the second-best arm; the bound's leading term can only grow.
    - ``'min'``: the best arm is kept, every other proposal implements the
      worst arm; the leading term can only shrink.
    """
    if mode not in COLLAPSE_MODES:
        raise ValidationError(
            _('Unknown collapse mode ‘{}’; try one of: {}')
            .format(mode, ', '.join(COLLAPSE_MODES))
        )
    mu = _must_verify_means(mu)
    order = np.argsort(-mu, kind='stable')
    best, runner_up, worst = order[0], order[1], order[-1]
    target = {'max': best, 'runner_up': runner_up, 'min': worst}[mode]
    pi = np.zeros((mu.size, mu.size))
    pi[:, target] = 1.0
    if mode != 'max':
        pi[best, :] = 0.0
        pi[best, best] = 1.0
    return pi
