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

"""ncbandit User Configurable Settings"""

from gettext import gettext as _

import os

from config_decorator import ConfigDecorator, section

from ..helpers.app_dirs import NCBanditAppDirs
from ..helpers.samplers import MAX_SEED as SEED_MAX
from ..inference.variational import INIT_MODES

from .log_levels import get_log_level_safe, get_log_name_safe, must_verify_log_level

__all__ = (
    'ConfigRoot',
    'SEED_MAX',
    'decorate_config',
    # PRIVATE:
    # 'NCBanditConfigurableAgents',
    # 'NCBanditConfigurableDev',
    # 'NCBanditConfigurableRun',
    # 'NCBanditConfigurableVI',
)


# ***
# *** Top-level, root config object.
# ***

@section(None)
class ConfigRoot(object):
    pass


# ***

def _must_be_positive(value):
    return int(value) >= 1


def _must_be_nonnegative(value):
    return float(value) >= 0


def _must_be_seed(value):
    return 0 <= int(value) <= SEED_MAX


@ConfigRoot.section('dev')
class NCBanditConfigurableDev(object):
    """"""

    def __init__(self, *args, **kwargs):
        # No super: @section replaces this class with a decorator instance.
        pass

    @property
    @ConfigRoot.setting(
        _("The log level for library (ncbandit) squaller"
            " (using Python logging library levels)"),
        validate=must_verify_log_level,
        conform=get_log_level_safe,
        recover=get_log_name_safe,
    )
    def lib_log_level(self):
        return 'WARNING'

    @property
    @ConfigRoot.setting(
        _("If True, colorize console log lines."),
    )
    def color_logs(self):
        return False


# ***

@ConfigRoot.section('run')
class NCBanditConfigurableRun(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Steps per episode (the horizon T)."),
        validate=_must_be_positive,
    )
    def horizon(self):
        return 2000

    @property
    @ConfigRoot.setting(
        _("Independent seeded episodes per agent."),
        validate=_must_be_positive,
    )
    def replications(self):
        return 30

    @property
    @ConfigRoot.setting(
        _("Master seed. Replication i draws from stream (seed, i)."),
        validate=_must_be_seed,
    )
    def seed(self):
        return 1

    @property
    @ConfigRoot.setting(
        _("Worker processes (NCBANDIT_WORKERS overrides)."),
        validate=_must_be_positive,
    )
    def workers(self):
        return 1

    @property
    @ConfigRoot.setting(
        _("Directory to which result files are written."),
    )
    def output_dir(self):
        if NCBanditAppDirs.APP_DIRS is None:
            # Happens when code is sourced, before NCBanditAppDirs() created.
            return 'results'
        return os.path.join(NCBanditAppDirs.APP_DIRS.user_data_dir, 'results')

    @property
    @ConfigRoot.setting(
        _("If True, also write every per-step cumulative regret (traces.csv)."),
    )
    def write_traces(self):
        return False

    @property
    @ConfigRoot.setting(
        _("If True, record per-replication wall time"
          " (results then differ between runs)."),
    )
    def wall_time(self):
        return False


# ***

@ConfigRoot.section('vi')
class NCBanditConfigurableVI(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Stop coordinate ascent once an ELBO sweep improves less than this."),
        value_type=float,
        validate=_must_be_nonnegative,
    )
    def tol_epsilon(self):
        return 1e-6

    @property
    @ConfigRoot.setting(
        _("Maximum coordinate ascent sweeps per VI run."),
        validate=_must_be_positive,
    )
    def max_iter(self):
        return 500

    @property
    @ConfigRoot.setting(
        _("How responsibilities start: ‘warm’ reuses the previous run."),
        choices=INIT_MODES,
    )
    def init_mode(self):
        return 'warm'


# ***

@ConfigRoot.section('agents')
class NCBanditConfigurableAgents(object):
    """"""

    def __init__(self, *args, **kwargs):
        pass

    @property
    @ConfigRoot.setting(
        _("Beta prior pseudo-count for successes and failures."),
        value_type=float,
        validate=lambda value: float(value) > 0,
    )
    def prior_alpha(self):
        return 1.0

    @property
    @ConfigRoot.setting(
        _("Dirichlet prior pseudo-count for each compliance entry."),
        value_type=float,
        validate=lambda value: float(value) > 0,
    )
    def prior_beta(self):
        return 1.0


# ***

def decorate_config(config=None):
    """Wraps or ensures the supplied config dict is an ncbandit config decorator.

    Passing nothing (or an empty dict) returns the root at its defaults.
    """
    if isinstance(config, ConfigDecorator):
        return config
    config_root = ConfigRoot
    config_root.forget_config_values()
    config_root.update(config or {})
    return config_root
