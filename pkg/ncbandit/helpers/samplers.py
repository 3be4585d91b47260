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

"""Seed-addressable random streams and the distributions the agents sample.

Every stream is identified by ``(seed, stream_id)`` plus an optional spawn
path, and wraps its own PCG64 generator, so replications can be run in any
order (or in any process) and still draw the same numbers.

Discrete draws (Bernoulli, Categorical) always consume exactly one uniform,
which keeps an environment's stream aligned no matter which actions the
agent picks.
"""

from gettext import gettext as _

from collections import namedtuple

import numpy as np

from .errors import ValidationError

__all__ = (
    'MAX_SEED',
    'BetaParams',
    'DirichletParams',
    'RngStream',
    'sample_bernoulli',
    'sample_beta',
    'sample_categorical',
    'sample_dirichlet',
    'sample_gamma',
)


MAX_SEED = 2 ** 64 - 1

BetaParams = namedtuple('BetaParams', ('success', 'failure'))

DirichletParams = namedtuple('DirichletParams', ('concentration', ))


def _must_verify_uint64(value, name):
    try:
        as_int = int(value)
    except (TypeError, ValueError):
        raise ValidationError(_('‘{}’ must be an integer, not: {!r}').format(name, value))
    if as_int != value or not (0 <= as_int <= MAX_SEED):
        raise ValidationError(
            _('‘{}’ must be an unsigned 64-bit integer, not: {!r}').format(name, value)
        )
    return as_int


class RngStream(object):
    """A reproducible random stream addressed by seed and stream id."""

    def __init__(self, seed, stream_id=0, path=()):
        self.seed = _must_verify_uint64(seed, 'seed')
        self.stream_id = _must_verify_uint64(stream_id, 'stream_id')
        self.path = tuple(_must_verify_uint64(step, 'path') for step in path)
        sequence = np.random.SeedSequence(
            self.seed, spawn_key=(self.stream_id, ) + self.path,
        )
        self.generator = np.random.Generator(np.random.PCG64(sequence))

    def __repr__(self):
        return 'RngStream(seed={}, stream_id={}, path={})'.format(
            self.seed, self.stream_id, self.path,
        )

    def spawn(self, child_id):
        """Return an independent child stream; the same id gives the same child."""
        return RngStream(self.seed, self.stream_id, self.path + (child_id, ))

    def uniform(self, size=None):
        return self.generator.random(size)

    def integers(self, count):
        """Return a uniform index in [0, count)."""
        if count < 1:
            raise ValidationError(_('Cannot pick from {} choices.').format(count))
        return int(self.generator.integers(count))

    def normal(self, size=None):
        return self.generator.standard_normal(size)


# ***

def sample_bernoulli(rng, p):
    if not (0.0 <= p <= 1.0):
        raise ValidationError(_('Bernoulli probability must be in [0, 1], not: {!r}')
                              .format(p))
    return int(rng.uniform() < p)


def sample_categorical(rng, weights):
    """Return index i with probability ``weights[i] / sum(weights)``.

    Inverse-CDF lookup over the cumulative weights; anything that rounds
    past the last boundary lands in the last bucket.
    """
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 1 or weights.size == 0:
        raise ValidationError(_('Expected a non-empty weight vector.'))
    if np.any(weights < 0.0) or not np.all(np.isfinite(weights)):
        raise ValidationError(
            _('Categorical weights must be finite and non-negative: {}')
            .format(weights.tolist())
        )
    total = weights.sum()
    if total <= 0.0:
        raise ValidationError(_('Categorical weights are all zero.'))
    cumulative = np.cumsum(weights / total)
    index = int(np.searchsorted(cumulative, rng.uniform(), side='right'))
    return min(index, weights.size - 1)


# ***

def _positive_shapes(shape, name):
    shapes = np.asarray(shape, dtype=float)
    if not np.all(np.isfinite(shapes)) or np.any(shapes <= 0.0):
        raise ValidationError(
            _('{} shapes must be finite and positive, not: {}').format(name, shape)
        )
    return shapes


def _log_gamma_draws(rng, shapes):
    """Return the logs of Gamma(shape, 1) draws, one per entry of ``shapes``.

    Marsaglia and Tsang's squeeze/rejection method, vectorised over all
    pending entries. Shapes below one are drawn at shape + 1 and boosted by
    U^(1/shape), which is applied in log space so tiny shapes cannot
    underflow to zero.
    """
    flat = shapes.ravel()
    boosted = flat < 1.0
    d = np.where(boosted, flat + 1.0, flat) - 1.0 / 3.0
    c = 1.0 / np.sqrt(9.0 * d)
    logs = np.empty_like(d)
    pending = np.arange(d.size)
    while pending.size:
        dd, cc = d[pending], c[pending]
        x = rng.normal(pending.size)
        v = (1.0 + cc * x) ** 3
        u = rng.uniform(pending.size)
        positive = v > 0.0
        log_v = np.log(np.where(positive, v, 1.0))
        with np.errstate(divide='ignore'):
            log_u = np.log(u)
        accept = positive & (
            (u < 1.0 - 0.0331 * x ** 4)
            | (log_u < 0.5 * x * x + dd * (1.0 - v + log_v))
        )
        logs[pending[accept]] = np.log(dd[accept]) + log_v[accept]
        pending = pending[~accept]
    if np.any(boosted):
        # 1 - U lies in (0, 1], so the log is finite.
        lifts = np.log1p(-rng.uniform(int(boosted.sum())))
        logs[boosted] += lifts / flat[boosted]
    return logs.reshape(shapes.shape)


def _like_shape(values, shape):
    if np.ndim(shape) == 0:
        return float(values)
    return values


def sample_gamma(rng, shape):
    shapes = _positive_shapes(shape, 'Gamma')
    return _like_shape(np.exp(_log_gamma_draws(rng, shapes)), shape)


def sample_beta(rng, params):
    """Draw from Beta(success, failure); arrays of shapes draw element-wise."""
    success = _positive_shapes(params[0], 'Beta')
    failure = _positive_shapes(params[1], 'Beta')
    success, failure = np.broadcast_arrays(success, failure)
    log_s = _log_gamma_draws(rng, success)
    log_f = _log_gamma_draws(rng, failure)
    top = np.maximum(log_s, log_f)
    num = np.exp(log_s - top)
    draws = num / (num + np.exp(log_f - top))
    return float(draws) if draws.ndim == 0 else draws


def sample_dirichlet(rng, params):
    """Draw from Dirichlet(concentration); a matrix draws one vector per row."""
    concentration = params[0] if isinstance(params, DirichletParams) else params
    shapes = _positive_shapes(concentration, 'Dirichlet')
    if shapes.ndim == 0 or shapes.shape[-1] == 0:
        raise ValidationError(_('Dirichlet concentration must be a vector.'))
    logs = _log_gamma_draws(rng, shapes)
    logs -= logs.max(axis=-1, keepdims=True)
    weights = np.exp(logs)
    return weights / weights.sum(axis=-1, keepdims=True)
