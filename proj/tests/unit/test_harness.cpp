// Copyright 2026 The qecdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qecdist/errors.hpp"
#include "qecdist/harness.hpp"

namespace qecdist {
namespace {

ExperimentConfig config_for(CodeId code, NoiseModel noise, InputPolicy input = InputPolicy::random()) {
    ExperimentConfig c;
    c.code = code;
    c.noise = noise;
    c.input = input;
    return c;
}

bool near_zero_or_one(double v) { return v < 1e-9 || v > 1.0 - 1e-9; }

TEST(run_trial, noiseless_trials_are_perfect) {
    for (CodeId code : {CodeId::Steane, CodeId::Surface17}) {
        for (uint64_t i = 0; i < 5; i++) {
            TrialRecord r = run_trial(config_for(code, NoiseModel::none()), 11, i);
            EXPECT_LT(r.metrics.p_fail_l1, 1e-10);
            EXPECT_LT(r.metrics.p_fail_psi1, 1e-10);
            EXPECT_LT(r.metrics.p_fail_psi2, 1e-10);
            EXPECT_GT(r.metrics.fidelity_sq, 1.0 - 1e-10);
        }
    }
}

TEST(run_trial, bit_exact_reproduction) {
    for (CodeId code : {CodeId::Steane, CodeId::Surface17}) {
        for (NoiseModel n : {NoiseModel::pulse_area(0.02), NoiseModel::pauli(0.01), NoiseModel::pauli(1.0)}) {
            TrialRecord a = run_trial(config_for(code, n), 5, 17);
            TrialRecord b = run_trial(config_for(code, n), 5, 17);
            EXPECT_TRUE(same_outcome(a, b)) << code_name(code) << ' ' << n.str();
            TrialRecord c = run_trial(config_for(code, n), 5, 18);
            EXPECT_FALSE(same_outcome(a, c));
        }
    }
}

TEST(run_trial, random_input_is_drawn_from_the_stream) {
    TrialRecord r = run_trial(config_for(CodeId::Steane, NoiseModel::none()), 3, 4);
    EXPECT_NEAR(std::abs(r.alpha - std::cos(r.theta)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r.beta - std::polar(std::sin(r.theta), r.phi)), 0.0, 1e-15);
}

TEST(run_trial, stabilizer_six_pauli_metrics_are_binary) {
    for (CodeId code : {CodeId::Steane, CodeId::Surface17}) {
        ExperimentConfig c = config_for(code, NoiseModel::pauli(0.02), InputPolicy::stabilizer_six());
        for (uint64_t i = 0; i < 300; i++) {
            const FailureMetrics m = run_trial(c, 21, i).metrics;
            ASSERT_TRUE(near_zero_or_one(m.p_fail_l1));
            ASSERT_TRUE(near_zero_or_one(m.p_fail_psi1));
            ASSERT_TRUE(near_zero_or_one(m.p_fail_psi2));
            ASSERT_TRUE(near_zero_or_one(m.p_code));
            ASSERT_TRUE(near_zero_or_one(m.fidelity_sq)) << code_name(code) << " trial " << i;
        }
    }
}

TEST(stabilizer_inputs, six_states) {
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_EQ(stabilizer_input(0), (std::pair<Complex, Complex>{1.0, 0.0}));
    EXPECT_EQ(stabilizer_input(1), (std::pair<Complex, Complex>{0.0, 1.0}));
    EXPECT_NEAR(std::abs(stabilizer_input(3).second + r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(stabilizer_input(4).second - Complex(0.0, r)), 0.0, 1e-15);
    EXPECT_THROW(stabilizer_input(6), ConfigError);
}

TEST(run_chain, noiseless_ten_cycles) {
    for (CodeId code : {CodeId::Steane, CodeId::Surface17}) {
        auto chain = run_chain(config_for(code, NoiseModel::none()), 10, 2, 0);
        ASSERT_EQ(chain.size(), 10u);
        for (std::size_t c = 0; c < chain.size(); c++) {
            EXPECT_EQ(chain[c].cycle, c + 1);
            EXPECT_GT(chain[c].metrics.fidelity_sq, 1.0 - 1e-10);
        }
    }
}

TEST(run_chain, first_cycle_matches_run_trial) {
    ExperimentConfig c = config_for(CodeId::Steane, NoiseModel::pulse_area(0.03));
    auto chain = run_chain(c, 3, 8, 9);
    EXPECT_TRUE(same_outcome(chain.front(), run_trial(c, 8, 9)));
}

TEST(run_chain, pauli_dips_recover) {
    // a weight-1 escape leaves P_code low with P_fail(L+1) = 0 and is repaired one cycle later
    ExperimentConfig c = config_for(CodeId::Steane, NoiseModel::pauli(0.01));
    bool found = false;
    for (uint64_t i = 0; i < 400 && !found; i++) {
        auto chain = run_chain(c, 3, 31, i);
        for (std::size_t k = 0; k + 1 < chain.size(); k++) {
            const auto &now = chain[k].metrics;
            const auto &next = chain[k + 1].metrics;
            if (now.p_code < 0.5 && now.p_fail_l1 < 1e-9 && next.p_code > 1.0 - 1e-9 && next.fidelity_sq > 1.0 - 1e-9) {
                found = true;
            }
        }
    }
    EXPECT_TRUE(found);
}

TEST(run_chain, pulse_area_residuals_stay_bounded) {
    ExperimentConfig c = config_for(CodeId::Steane, NoiseModel::pulse_area(0.005));
    std::vector<double> early;
    std::vector<double> late;
    for (uint64_t i = 0; i < 30; i++) {
        auto chain = run_chain(c, 10, 41, i);
        for (const auto &r : chain) {
            ASSERT_TRUE(r.metrics.ratio_defined);
            (r.cycle <= 5 ? early : late).push_back(r.metrics.ratio);
        }
    }
    auto median = [](std::vector<double> v) {
        std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
        return v[v.size() / 2];
    };
    EXPECT_GE(median(late), 0.5 * median(early));
}

TEST(run_sweep, noiseless_grid_has_no_failures) {
    const std::vector<double> grid = {0.0};
    SweepSummary s = run_sweep(config_for(CodeId::Steane, NoiseModel::none()), grid, 500, 1);
    ASSERT_EQ(s.points.size(), 1u);
    EXPECT_EQ(s.points[0].failures, 0u);
    EXPECT_EQ(s.points[0].trials, 500u);
    EXPECT_LT(s.points[0].ci.high, 4.0 / 500);
    EXPECT_GT(s.points[0].ci.high, 2.0 / 500);
}

TEST(run_sweep, worker_count_does_not_change_results) {
    const std::vector<double> grid = {0.01, 0.03};
    ExperimentConfig c = config_for(CodeId::Surface17, NoiseModel::pulse_area(0.0));
    SweepOptions one;
    one.workers = 1;
    SweepOptions three;
    three.workers = 3;
    SweepSummary a = run_sweep(c, grid, 120, 9, one);
    SweepSummary b = run_sweep(c, grid, 120, 9, three);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); i++) {
        EXPECT_EQ(a.points[i], b.points[i]);
    }
    EXPECT_EQ(a.points[1].parameter, 0.03);
}

TEST(run_sweep, records_pass_bounds_and_match_histograms) {
    const std::vector<double> grid = {0.02};
    ExperimentConfig c = config_for(CodeId::Steane, NoiseModel::pauli(0.02));
    c.criterion = MetricId::PFailL1;
    std::vector<TrialRecord> records;
    SweepOptions o;
    o.workers = 2;
    o.on_record = [&records](const TrialRecord &r) { records.push_back(r); };
    SweepSummary s = run_sweep(c, grid, 300, 4, o);
    ASSERT_EQ(records.size(), 300u);
    uint64_t ones = 0;
    for (std::size_t i = 0; i < records.size(); i++) {
        EXPECT_EQ(records[i].trial_index, i);
        EXPECT_TRUE(check_bounds(records[i].metrics).ok);
        ones += records[i].metrics.p_fail_l1 > 1.0 - 1e-9;
    }
    // binomial structure: failures under the L+1 criterion are exactly the unit-mass trials
    EXPECT_EQ(s.points[0].failures, ones);
    EXPECT_EQ(s.points[0].histograms[MetricId::PFailL1].one_count(), ones);
    EXPECT_EQ(s.points[0].failures_by_metric[0], ones);
}

TEST(run_sweep, curve_uses_the_criterion) {
    const std::vector<double> grid = {0.01, 0.02};
    ExperimentConfig c = config_for(CodeId::Steane, NoiseModel::pulse_area(0.0));
    SweepSummary s = run_sweep(c, grid, 50, 2);
    auto curve = s.curve();
    ASSERT_EQ(curve.size(), 2u);
    EXPECT_EQ(curve[1].x, 0.02);
    EXPECT_EQ(curve[1].failures, s.points[1].failures_by_metric[1]);
    EXPECT_EQ(s.curve_for(MetricId::PFailL1)[1].failures, s.points[1].failures_by_metric[0]);
}

TEST(run_sweep, rejects_bad_arguments) {
    const std::vector<double> grid = {0.01};
    ExperimentConfig c = config_for(CodeId::Steane, NoiseModel::pauli(0.01));
    EXPECT_THROW(run_sweep(c, grid, 0, 1), ConfigError);
    c.criterion = MetricId::PCode;
    EXPECT_THROW(run_sweep(c, grid, 10, 1), ConfigError);
}

}  // namespace
}  // namespace qecdist
