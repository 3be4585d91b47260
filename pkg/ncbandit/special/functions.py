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

"""Special functions and divergences used by the VI engine and the bounds.

The gamma-family functions accept a scalar or an array. A scalar argument
returns a Python ``float``; an array argument returns an array of the same
shape.
"""

from gettext import gettext as _

import math

import numpy as np

from ..helpers.errors import DomainError, ValidationError

__all__ = (
    'SIMPLEX_TOLERANCE',
    'digamma',
    'ln_gamma',
    'ln_beta',
    'ln_multivariate_beta',
    'bernoulli_kl',
    'kl_pmf',
    'kl_upper_bound',
    'check_simplex',
    # Private:
    #  '_positive_array',
)


SIMPLEX_TOLERANCE = 1e-9

# Arguments below these are shifted up by the recurrence before the
# asymptotic expansions are applied.
DIGAMMA_SHIFT = 6.0
LN_GAMMA_SHIFT = 10.0

HALF_LN_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# ln(1 + x) - x switches to its Taylor series below this |x|; the first
# dropped term is under 1e-22 relative to x².
LOG1P_SERIES_CUTOFF = 1e-2
LOG1P_SERIES_TERMS = 12


def _positive_array(x, func_name):
    values = np.array(x, dtype=float, copy=True)
    if not np.all(np.isfinite(values)) or np.any(values <= 0.0):
        raise DomainError(
            _('{} is only defined for finite positive arguments, not: {}')
            .format(func_name, x)
        )
    return values


def _like_input(values, x):
    if np.ndim(x) == 0:
        return float(values)
    return values


# ***

def digamma(x):
    """Return ψ(x), the logarithmic derivative of the gamma function.

    Small arguments are raised past ``DIGAMMA_SHIFT`` with
    ψ(x) = ψ(x + 1) - 1/x, then the asymptotic (Bernoulli number)
    expansion is summed through the x⁻¹⁴ term.
    """
    xs = _positive_array(x, 'digamma')
    value = np.zeros_like(xs)
    small = xs < DIGAMMA_SHIFT
    while np.any(small):
        value[small] -= 1.0 / xs[small]
        xs[small] += 1.0
        small = xs < DIGAMMA_SHIFT
    inv = 1.0 / xs
    inv2 = inv * inv
    series = inv2 * (
        1.0 / 12.0 - inv2 * (
            1.0 / 120.0 - inv2 * (
                1.0 / 252.0 - inv2 * (
                    1.0 / 240.0 - inv2 * (
                        1.0 / 132.0 - inv2 * (
                            691.0 / 32760.0 - inv2 * (1.0 / 12.0)
                        )
                    )
                )
            )
        )
    )
    value += np.log(xs) - 0.5 * inv - series
    return _like_input(value, x)


def ln_gamma(x):
    """Return ln Γ(x) for x > 0 via a shifted Stirling series."""
    xs = _positive_array(x, 'ln_gamma')
    value = np.zeros_like(xs)
    small = xs < LN_GAMMA_SHIFT
    while np.any(small):
        value[small] -= np.log(xs[small])
        xs[small] += 1.0
        small = xs < LN_GAMMA_SHIFT
    inv = 1.0 / xs
    inv2 = inv * inv
    series = inv * (
        1.0 / 12.0 - inv2 * (
            1.0 / 360.0 - inv2 * (
                1.0 / 1260.0 - inv2 * (
                    1.0 / 1680.0 - inv2 * (
                        1.0 / 1188.0 - inv2 * (
                            691.0 / 360360.0 - inv2 * (1.0 / 156.0)
                        )
                    )
                )
            )
        )
    )
    value += (xs - 0.5) * np.log(xs) - xs + HALF_LN_TWO_PI + series
    return _like_input(value, x)


def ln_beta(a, b):
    """Return ln B(a, b) = ln Γ(a) + ln Γ(b) - ln Γ(a + b)."""
    value = ln_gamma(a) + ln_gamma(b) - ln_gamma(np.add(a, b))
    return value


def ln_multivariate_beta(concentration, axis=-1):
    """Return ln B(β) = Σ ln Γ(β_l) - ln Γ(Σ β_l) along ``axis``."""
    concentration = np.asarray(concentration, dtype=float)
    return (
        np.sum(ln_gamma(concentration), axis=axis)
        - ln_gamma(np.sum(concentration, axis=axis))
    )


# ***

def _check_probability(value, name):
    if not (0.0 <= value <= 1.0):
        raise ValidationError(
            _('Expected a probability in [0, 1] for ‘{}’, not: {}').format(name, value)
        )


def _log1p_minus_x(x):
    """Return ln(1 + x) - x without cancellation for small ``x``."""
    if abs(x) < LOG1P_SERIES_CUTOFF:
        # -x²/2 + x³/3 - ... summed from the smallest term up.
        total = 0.0
        for power in range(LOG1P_SERIES_TERMS + 1, 1, -1):
            total = x * (total + (-1.0) ** (power + 1) / power)
        return x * total
    return math.log1p(x) - x


def bernoulli_kl(p, q):
    """Return D_KL(Bern(p) ‖ Bern(q)).

    Returns ``math.inf`` (rather than raising) when Bern(p) is not absolutely
    continuous with respect to Bern(q), i.e., q ∈ {0, 1} and p ≠ q.

    With d = p - q the divergence is rewritten as
    d²/(q(1-q)) + p·g(d/q) + (1-p)·g(-d/(1-q)), g(x) = ln(1+x) - x, so it
    keeps full relative precision as p approaches q.
    """
    _check_probability(p, 'p')
    _check_probability(q, 'q')
    if q == 0.0 or q == 1.0:
        return 0.0 if p == q else math.inf
    p = float(p)
    q = float(q)
    gap = p - q
    divergence = gap * gap / (q * (1.0 - q))
    # 0·ln 0 = 0.
    if p > 0.0:
        divergence += p * _log1p_minus_x(gap / q)
    if p < 1.0:
        divergence += (1.0 - p) * _log1p_minus_x(-gap / (1.0 - q))
    return max(divergence, 0.0)


def check_simplex(pmf, name='pmf', tolerance=SIMPLEX_TOLERANCE):
    """Return ``pmf`` as a float array, or raise if it is off the simplex."""
    pmf = np.asarray(pmf, dtype=float)
    if pmf.ndim != 1 or pmf.size == 0:
        raise ValidationError(
            _('Expected a non-empty probability vector for ‘{}’.').format(name)
        )
    if np.any(pmf < 0.0) or not np.all(np.isfinite(pmf)):
        raise ValidationError(
            _('Probability vector ‘{}’ has negative or non-finite entries: {}')
            .format(name, pmf.tolist())
        )
    if abs(pmf.sum() - 1.0) > tolerance:
        raise ValidationError(
            _('Probability vector ‘{}’ is off the simplex (sums to {!r}).')
            .format(name, float(pmf.sum()))
        )
    return pmf


def _check_pmf_pair(p, q):
    p = check_simplex(p, 'p')
    q = check_simplex(q, 'q')
    if p.shape != q.shape:
        raise ValidationError(
            _('PMFs differ in length: {} vs {}').format(p.size, q.size)
        )
    if np.any(q <= 0.0):
        raise ValidationError(_('The reference PMF ‘q’ must be strictly positive.'))
    return p, q


def kl_pmf(p, q):
    """Return Σ p ln(p/q) for two PMFs on the same finite support."""
    p, q = _check_pmf_pair(p, q)
    support = p > 0.0
    divergence = float(np.sum(p[support] * np.log(p[support] / q[support])))
    return max(divergence, 0.0)


def kl_upper_bound(p, q):
    """Return Σ p²/q - 1, which bounds ``kl_pmf(p, q)`` from above."""
    p, q = _check_pmf_pair(p, q)
    return float(np.sum(p * p / q) - 1.0)
