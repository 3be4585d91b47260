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

"""Special functions, divergences, and regret-bound analytics."""

from .bounds import (  # noqa: F401
    BernoulliPair,
    BoundParams,
    bound_leading_term,
    collapse_matrix,
    delta_bound,
    f_bound,
    grad_f,
)
from .functions import (  # noqa: F401
    bernoulli_kl,
    digamma,
    kl_pmf,
    kl_upper_bound,
    ln_beta,
    ln_gamma,
)
