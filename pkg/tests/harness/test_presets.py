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

import numpy as np
import pytest

from ncbandit.agents import AgentSpec
from ncbandit.harness import presets
from ncbandit.helpers.errors import ValidationError


class TestSweepPresets(object):
    def test_grid(self):
        grid = presets.sweep_grid()
        assert len(grid) == 21
        assert grid[0] == 0.0
        assert grid[1] == 0.05
        assert grid[-1] == 1.0

    def test_coarse_grid(self):
        assert presets.sweep_grid(step=0.25) == [0.0, 0.25, 0.5, 0.75, 1.0]

    @pytest.mark.parametrize('step, stop', ((0.0, 1.0), (1.5, 1.0), (0.1, 1.2)))
    def test_rejects_grid(self, step, stop):
        with pytest.raises(ValidationError):
            presets.sweep_grid(step, stop)

    def test_environment(self):
        environment = presets.sweep_environment(0.2)
        assert environment.label == 'p=0.20'
        assert environment.compliance.pi[0].tolist() == [[0.8, 0.2], [0.2, 0.8]]
        assert environment.reward.mu.tolist() == [[0.75, 0.25]]

    def test_full_swap_flips_the_best_proposal(self):
        assert presets.sweep_environment(1.0).optimal_proposal(0).proposal == 1

    def test_rejects_p(self):
        with pytest.raises(ValidationError):
            presets.sweep_compliance(1.5)


class TestContextualPresets(object):
    def test_rewards(self):
        assert presets.CB_REWARDS == ((0.65, 0.35), (0.25, 0.75))
        assert presets.CB_CONTEXT_PROBS == (0.5, 0.5)

    def test_compliant_environment_observes_the_rewards(self):
        environment = presets.cb_environment(1)
        assert np.array_equal(environment.observable_rewards(), presets.CB_REWARDS)
        assert environment.label == 'env-1'

    def test_swapped_environment(self):
        environment = presets.cb_environment(2)
        assert environment.optimal_proposal(0).proposal == 1
        assert environment.optimal_proposal(1).proposal == 0

    def test_noncompliant_in_expectation(self):
        environment = presets.cb_environment(4)
        assert environment.optimal_proposal(0).proposal == 1
        assert environment.optimal_proposal(1).proposal == 0

    def test_unknown(self):
        with pytest.raises(ValidationError):
            presets.cb_environment(5)


class TestStrokeTrialPresets(object):
    def test_published_rows_are_renormalized(self):
        raw = np.asarray(presets.IST_COMPLIANCE).sum(axis=1)
        assert raw[3] == pytest.approx(0.999)
        assert raw[5] == pytest.approx(1.001)
        environment = presets.ist_environment('sts')
        assert np.allclose(environment.compliance.pi.sum(axis=2), 1.0, atol=1e-12)

    def test_long_term_recovery_best_proposal(self):
        environment = presets.ist_environment('LTR')
        assert environment.label == 'ist-ltr'
        assert environment.optimal_proposal(0).proposal == 4

    def test_reward_classes(self):
        assert list(presets.IST_REWARDS) == ['sts', 'lts', 'ltr']
        assert all(len(mu) == 6 for mu in presets.IST_REWARDS.values())

    def test_unknown(self):
        with pytest.raises(ValidationError):
            presets.ist_environment('mortality')


class TestAgentSpecs(object):
    def test_latent_agent_per_soft_start(self):
        specs = presets.agent_specs(presets.CB_AGENTS)
        assert [spec.label for spec in specs] == [
            'ts', 'ts-check', 'ts-obs', 'ts-lat-0', 'ts-lat-40',
        ]
        assert specs[0].vi is None
        assert specs[-1].vi.max_iter == 500

    def test_priors(self):
        (spec, ) = presets.agent_specs(('ts', ), prior_alpha=2, prior_beta=3)
        assert (spec.prior_alpha, spec.prior_beta) == (2.0, 3.0)

    def test_make_config(self, two_arm_environment):
        config = presets.make_config('x', two_arm_environment, (AgentSpec('ts'), ), 10, 2)
        assert config.agents == [AgentSpec('ts')]
        assert config.seed == 1
        assert config.vi.init_mode == 'warm'


class TestRunners(object):
    def test_sweep_flags_check_above_half(self):
        specs = presets.agent_specs(('ts', 'ts-check'))
        result = presets.sweep_noncompliance(
            grid=(0.0, 0.75), agents=specs, horizon=20, replications=2,
        )
        assert result.experiment == 'sweep'
        assert [(stats.label, stats.agent) for stats in result.summaries()] == [
            ('p=0.00', 'ts'), ('p=0.00', 'ts-check'),
            ('p=0.75', 'ts'), ('p=0.75', 'ts-check'),
        ]
        assert len(result.flags) == 1
        assert 'p=0.75 ts-check' in result.flags[0]
        assert len(result.configs) == 2

    def test_cb_suite(self):
        result = presets.run_cb_suite(
            envs=(2, 3), agents=presets.agent_specs(('ts-obs', )), horizon=20, replications=2,
        )
        assert [stats.label for stats in result.summaries()] == ['env-2', 'env-3']
        assert result.experiment == 'cb'

    def test_ist_adds_the_baseline(self):
        report = presets.run_ist(
            'LTR', agents=presets.agent_specs(('ts', )), horizon=20, replications=2,
        )
        assert report.reward_class == 'ltr'
        assert list(report.excess) == ['ts', 'uniform']
        assert report.excess['uniform'] == 0.0
        baseline = report.result.summary_for('ist-ltr', 'uniform').mean
        agent = report.result.summary_for('ist-ltr', 'ts').mean
        assert report.excess['ts'] == pytest.approx(baseline - agent)
