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

"""Coordinate-ascent mean-field VI for a Bernoulli bandit with latent compliance.

The model, for one context with K arms and N observations (zᵢ, rᵢ):

    π_k ~ Dir(β·1),  μ_j ~ Beta(α₁, α₀),
    aᵢ | zᵢ ~ Cat(π_{zᵢ}),  rᵢ | aᵢ ~ Bern(μ_{aᵢ}).

The implemented actions aᵢ are never seen. The posterior is approximated by

    q = Πᵢ Cat(aᵢ; φᵢ) · Πⱼ Beta(μⱼ; α′₁ⱼ, α′₀ⱼ) · Πₖ Dir(π_k; β′_k),

and each factor is updated in turn (q(μ), then q(π), then q(a)) until the
ELBO stops improving by more than ``tol_epsilon``.

The update functions assign the new parameters onto the state they are
given and also return them.
"""

from gettext import gettext as _

import logging
from collections import namedtuple

import numpy as np

from ..helpers.errors import InternalError, ValidationError
from ..helpers.samplers import sample_dirichlet
from ..special.functions import digamma, ln_beta, ln_multivariate_beta

__all__ = (
    'INIT_MODES',
    'ConjugatePrior',
    'LatentData',
    'VIConfig',
    'VariationalState',
    'elbo',
    'elbo_terms',
    'init_state',
    'make_latent_data',
    'must_verify_vi_config',
    'run',
    'sweep',
    'update_q_a',
    'update_q_mu',
    'update_q_pi',
)


logger = logging.getLogger('ncbandit.log')

INIT_MODES = ('prior-sample', 'uniform', 'warm')

ConjugatePrior = namedtuple(
    'ConjugatePrior', ('alpha_success', 'alpha_failure', 'beta'),
)
ConjugatePrior.__new__.__defaults__ = (1.0, 1.0, 1.0)

LatentData = namedtuple('LatentData', ('proposed', 'reward'))

VIConfig = namedtuple('VIConfig', ('tol_epsilon', 'max_iter', 'init_mode'))
VIConfig.__new__.__defaults__ = (1e-6, 500, 'warm')


def must_verify_vi_config(config):
    if not (config.tol_epsilon > 0.0):
        raise ValidationError(
            _('VI tolerance must be > 0, not: {!r}').format(config.tol_epsilon)
        )
    if int(config.max_iter) != config.max_iter or config.max_iter < 1:
        raise ValidationError(
            _('VI max_iter must be an integer ≥ 1, not: {!r}').format(config.max_iter)
        )
    if config.init_mode not in INIT_MODES:
        raise ValidationError(
            _('Unknown VI init mode ‘{}’; try one of: {}')
            .format(config.init_mode, ', '.join(INIT_MODES))
        )
    return config


def make_latent_data(proposed, reward, num_arms):
    proposed = np.asarray(proposed, dtype=np.int64).reshape(-1)
    reward = np.asarray(reward, dtype=np.int64).reshape(-1)
    if proposed.shape != reward.shape:
        raise ValidationError(_('Every proposal needs exactly one reward.'))
    if np.any(proposed < 0) or np.any(proposed >= num_arms):
        raise ValidationError(_('Proposals must lie in [0, {}).').format(num_arms))
    if np.any((reward != 0) & (reward != 1)):
        raise ValidationError(_('Rewards must be 0 or 1.'))
    return LatentData(proposed, reward)


class VariationalState(object):
    """The mean-field parameters (φ, α′, β′) plus the ELBO trace of a run."""

    def __init__(self, phi, alpha_success, alpha_failure, beta_prime, prior):
        self.phi = np.asarray(phi, dtype=float)
        self.alpha_success = np.asarray(alpha_success, dtype=float)
        self.alpha_failure = np.asarray(alpha_failure, dtype=float)
        self.beta_prime = np.asarray(beta_prime, dtype=float)
        self.prior = prior
        self.elbo_trace = []
        self.converged = False
        self.iterations = 0

    def __repr__(self):
        return (
            'VariationalState(N={}, K={}, iterations={}, converged={}, elbo={})'
            .format(
                self.phi.shape[0], self.num_arms, self.iterations, self.converged,
                self.elbo_trace[-1] if self.elbo_trace else None,
            )
        )

    @property
    def num_arms(self):
        return self.alpha_success.size

    @property
    def alpha_prime(self):
        """Return the reward posteriors as a K × 2 array of (α′₁ⱼ, α′₀ⱼ)."""
        return np.stack((self.alpha_success, self.alpha_failure), axis=1)

    def mean_reward(self):
        return self.alpha_success / (self.alpha_success + self.alpha_failure)

    def mean_compliance(self):
        return self.beta_prime / self.beta_prime.sum(axis=1, keepdims=True)


# ***

def update_q_mu(state, data):
    """α′₁ⱼ = α₁ + Σᵢ rᵢ φᵢ(j) and α′₀ⱼ = α₀ + Σᵢ (1 - rᵢ) φᵢ(j)."""
    reward = data.reward.astype(float)
    state.alpha_success = state.prior.alpha_success + reward.dot(state.phi)
    state.alpha_failure = state.prior.alpha_failure + (1.0 - reward).dot(state.phi)
    return state.alpha_success, state.alpha_failure


def update_q_pi(state, data):
    """β′_{k,j} = β + Σᵢ 1[zᵢ = k] φᵢ(j)."""
    proposals = np.eye(state.num_arms)[data.proposed]
    state.beta_prime = state.prior.beta + proposals.T.dot(state.phi)
    return state.beta_prime


def _expected_logs(state):
    psi_total = digamma(state.alpha_success + state.alpha_failure)
    log_mu = digamma(state.alpha_success) - psi_total
    log_one_minus_mu = digamma(state.alpha_failure) - psi_total
    log_pi = (
        digamma(state.beta_prime)
        - digamma(state.beta_prime.sum(axis=1))[:, np.newaxis]
    )
    return log_mu, log_one_minus_mu, log_pi


def update_q_a(state, data):
    """φᵢ(j) ∝ exp(E[ln p(rᵢ | μⱼ)] + E[ln π_{zᵢ, j}]), one softmax per row."""
    if not data.proposed.size:
        state.phi = np.zeros((0, state.num_arms))
        return state.phi
    log_mu, log_one_minus_mu, log_pi = _expected_logs(state)
    reward = data.reward.astype(float)[:, np.newaxis]
    logits = (
        reward * log_mu
        + (1.0 - reward) * log_one_minus_mu
        + log_pi[data.proposed]
    )
    logits -= logits.max(axis=1, keepdims=True)
    weights = np.exp(logits)
    totals = weights.sum(axis=1, keepdims=True)
    if not np.all(np.isfinite(totals)) or np.any(totals <= 0.0):
        raise InternalError(_('Responsibility softmax lost all of its mass.'))
    state.phi = weights / totals
    return state.phi


# ***

ElboTerms = namedtuple(
    'ElboTerms', (
        'reward_likelihood',
        'compliance_likelihood',
        'reward_prior',
        'compliance_prior',
        'responsibility_entropy',
        'reward_entropy',
        'compliance_entropy',
    ),
)


def elbo_terms(state, data):
    """Return the seven expectations that sum to the ELBO.

    The Dirichlet prior term drops its constant -K·ln B(β·1), so every
    trace is offset by the same amount.
    """
    prior = state.prior
    phi = state.phi
    log_mu, log_one_minus_mu, log_pi = _expected_logs(state)
    reward = data.reward.astype(float)

    reward_likelihood = float(
        reward.dot(phi).dot(log_mu) + (1.0 - reward).dot(phi).dot(log_one_minus_mu)
    )
    compliance_likelihood = float(np.sum(phi * log_pi[data.proposed]))

    reward_prior = float(np.sum(
        (prior.alpha_success - 1.0) * log_mu
        + (prior.alpha_failure - 1.0) * log_one_minus_mu
        - ln_beta(prior.alpha_success, prior.alpha_failure)
    ))
    compliance_prior = float((prior.beta - 1.0) * np.sum(log_pi))

    positive = phi > 0.0
    responsibility_entropy = float(-np.sum(phi[positive] * np.log(phi[positive])))

    success, failure = state.alpha_success, state.alpha_failure
    reward_entropy = float(np.sum(
        ln_beta(success, failure)
        - (success - 1.0) * digamma(success)
        - (failure - 1.0) * digamma(failure)
        + (success + failure - 2.0) * digamma(success + failure)
    ))

    beta_prime = state.beta_prime
    totals = beta_prime.sum(axis=1)
    compliance_entropy = float(np.sum(
        ln_multivariate_beta(beta_prime, axis=1)
        + (totals - state.num_arms) * digamma(totals)
        - np.sum((beta_prime - 1.0) * digamma(beta_prime), axis=1)
    ))

    return ElboTerms(
        reward_likelihood,
        compliance_likelihood,
        reward_prior,
        compliance_prior,
        responsibility_entropy,
        reward_entropy,
        compliance_entropy,
    )


def elbo(state, data):
    return float(sum(elbo_terms(state, data)))


def sweep(state, data):
    """Run one q(μ) → q(π) → q(a) pass and return the ELBO afterwards."""
    update_q_mu(state, data)
    update_q_pi(state, data)
    update_q_a(state, data)
    return elbo(state, data)


# ***

def init_state(prior, num_arms, data, rng, mode, previous=None):
    """Return a fresh state for ``data``.

    - ``'prior-sample'``: each φ row is one Dir(β·1) draw from ``rng``.
    - ``'uniform'``: every φ row is 1/K.
    - ``'warm'``: reuse ``previous`` (its φ rows and posteriors) and draw
      only the rows it lacks; without a usable ``previous`` this is
      ``'prior-sample'``.
    """
    num_rows = data.proposed.size
    fresh = np.full(num_arms, prior.beta)
    if mode == 'warm' and previous is not None and previous.phi.shape[0] <= num_rows:
        known = previous.phi.shape[0]
        extra = num_rows - known
        drawn = (
            sample_dirichlet(rng, np.tile(fresh, (extra, 1)))
            if extra else np.zeros((0, num_arms))
        )
        state = VariationalState(
            np.vstack((previous.phi, drawn)),
            previous.alpha_success.copy(),
            previous.alpha_failure.copy(),
            previous.beta_prime.copy(),
            prior,
        )
        return state

    if mode == 'uniform':
        phi = np.full((num_rows, num_arms), 1.0 / num_arms)
    elif num_rows:
        phi = sample_dirichlet(rng, np.tile(fresh, (num_rows, 1)))
    else:
        phi = np.zeros((0, num_arms))
    return VariationalState(
        phi,
        np.full(num_arms, prior.alpha_success),
        np.full(num_arms, prior.alpha_failure),
        np.full((num_arms, num_arms), prior.beta),
        prior,
    )


def run(config, data, rng, num_arms, prior=None, previous=None, init_only=False):
    """Fit the mean-field posterior to ``data`` by coordinate ascent.

    Stops once a sweep improves the ELBO by less than ``config.tol_epsilon``
    (``converged`` is then True) or after ``config.max_iter`` sweeps.
    ``elbo_trace`` starts with the ELBO of the initial state.
    """
    config = must_verify_vi_config(config)
    prior = prior or ConjugatePrior()
    if not isinstance(data, LatentData):
        data = make_latent_data(data[0], data[1], num_arms)
    if not data.proposed.size and not init_only:
        raise ValidationError(_('Variational inference needs at least one sample.'))

    state = init_state(prior, num_arms, data, rng, config.init_mode, previous)
    state.elbo_trace.append(elbo(state, data))
    if init_only:
        return state

    while state.iterations < config.max_iter:
        state.elbo_trace.append(sweep(state, data))
        state.iterations += 1
        if state.elbo_trace[-1] - state.elbo_trace[-2] < config.tol_epsilon:
            state.converged = True
            break

    if not state.converged:
        logger.warning(
            'VI stopped after {} sweeps without converging (N={}, ΔELBO={:.3g})'
            .format(
                state.iterations, data.proposed.size,
                state.elbo_trace[-1] - state.elbo_trace[-2],
            )
        )
    return state
