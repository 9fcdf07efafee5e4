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
#ifndef QECDIST_HARNESS_HPP
#define QECDIST_HARNESS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qecdist/code_layout.hpp"
#include "qecdist/fault_plan.hpp"
#include "qecdist/histogram.hpp"
#include "qecdist/metrics.hpp"
#include "qecdist/noise.hpp"
#include "qecdist/stats.hpp"
#include "qecdist/steane.hpp"
#include "qecdist/surface17.hpp"

namespace qecdist {

enum class InputKind { Random, StabilizerSix, Fixed };

std::string input_kind_name(InputKind kind);
InputKind parse_input_kind(const std::string &name);

struct InputPolicy {
    InputKind kind = InputKind::Random;
    /// Only used by Fixed.
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    static InputPolicy random() { return {}; }
    static InputPolicy stabilizer_six() { return {InputKind::StabilizerSix}; }
    static InputPolicy fixed(Complex alpha, Complex beta);
    bool operator==(const InputPolicy &) const = default;
};

/// (alpha, beta) of the k-th stabilizer input: |0>, |1>, |+>, |->, |+i>, |-i>.
std::pair<Complex, Complex> stabilizer_input(std::size_t k);

struct ExperimentConfig {
    CodeId code = CodeId::Steane;
    NoiseModel noise;
    InputPolicy input;
    /// One of p_fail_l1, p_fail_psi1, p_fail_psi2.
    MetricId criterion = MetricId::PFailPsi1;
    double threshold = 1e-6;
};

/// Compact syndrome history. Steane: the Z-detection rounds then the X-detection rounds
/// (3-bit values). Surface-17: one value per round, x_bits | z_bits << 4, then the consensus.
struct SyndromeSummary {
    std::vector<uint32_t> z_detect_rounds;
    std::vector<uint32_t> x_detect_rounds;
    std::vector<uint32_t> rounds;
    uint32_t consensus = 0;
    std::string corrections;
    std::string injected;
    bool operator==(const SyndromeSummary &) const = default;
};

struct TrialRecord {
    CodeId code = CodeId::Steane;
    NoiseModel noise;
    uint64_t master_seed = 0;
    uint64_t trial_index = 0;
    std::size_t cycle = 1;
    double theta = 0.0;
    double phi = 0.0;
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};
    FailureMetrics metrics;
    SyndromeSummary syndrome;
    /// Excluded from determinism comparisons.
    double wall_time_s = 0.0;
};

/// Bit-exact comparison of everything except wall time.
bool same_outcome(const TrialRecord &a, const TrialRecord &b);

/// Shared immutable code objects.
const SteaneCode &steane_code();
const Surface17Code &surface17_code();

/// Runs one QEC cycle of the chosen code on a full register.
SyndromeSummary run_memory_cycle(
    CodeId code, StateVector &state, const NoiseModel &noise, RngStream &rng, std::span<const ScheduledFault> plan = {});

/// Draws the input, encodes, runs one cycle, computes the metrics and enforces the bounds
/// (MetricDefect on violation).
TrialRecord run_trial(const ExperimentConfig &config, uint64_t master_seed, uint64_t trial_index);

/// Feeds each cycle's output into the next; metrics after every cycle are taken against the
/// original input.
std::vector<TrialRecord> run_chain(
    const ExperimentConfig &config, std::size_t n_cycles, uint64_t master_seed, uint64_t trial_index);

struct SweepPoint {
    double parameter = 0.0;
    uint64_t trials = 0;
    /// Trials whose criterion metric exceeds the threshold.
    uint64_t failures = 0;
    /// Same count for p_fail_l1, p_fail_psi1, p_fail_psi2.
    std::array<uint64_t, 3> failures_by_metric{};
    Interval ci{0.0, 1.0};
    HistogramSet histograms;

    double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(trials); }
    bool operator==(const SweepPoint &) const = default;
};

struct SweepSummary {
    ExperimentConfig config;
    uint64_t master_seed = 0;
    uint64_t trials_per_point = 0;
    std::vector<SweepPoint> points;

    std::vector<CurvePoint> curve() const;
    std::vector<CurvePoint> curve_for(MetricId metric) const;
};

struct SweepOptions {
    /// 0 picks std::thread::hardware_concurrency().
    std::size_t workers = 0;
    /// Called once per finished trial (from the controlling thread, in trial order per point).
    std::function<void(const TrialRecord &)> on_record;
    /// Called from worker threads with (point index, trials finished in that point).
    std::function<void(std::size_t, uint64_t)> on_progress;
};

/// Every grid value replaces config.noise.strength; trial indices are 0..trials-1 at every point.
SweepSummary run_sweep(
    const ExperimentConfig &config,
    std::span<const double> grid,
    uint64_t trials_per_point,
    uint64_t master_seed,
    const SweepOptions &options = {});

}  // namespace qecdist

#endif
