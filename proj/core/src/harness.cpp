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
#include "qecdist/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

std::size_t criterion_slot(MetricId id) {
    switch (id) {
        case MetricId::PFailL1:
            return 0;
        case MetricId::PFailPsi1:
            return 1;
        case MetricId::PFailPsi2:
            return 2;
        default:
            throw ConfigError("failure criterion must be p_fail_l1, p_fail_psi1 or p_fail_psi2");
    }
}

struct DrawnInput {
    double theta;
    double phi;
    Complex alpha;
    Complex beta;
    /// Index into the per-sweep basis cache, or -1 when the bases must be built per trial.
    int cache_slot;
};

DrawnInput draw_input(const InputPolicy &policy, RngStream &rng) {
    switch (policy.kind) {
        case InputKind::Random: {
            auto [theta, phi] = random_input_angles(rng);
            return {theta, phi, Complex(std::cos(theta), 0.0), std::sin(theta) * std::polar(1.0, phi), -1};
        }
        case InputKind::StabilizerSix: {
            auto k = static_cast<std::size_t>(std::floor(6.0 * rng.uniform()));
            k = std::min<std::size_t>(k, 5);
            auto [a, b] = stabilizer_input(k);
            double theta = std::atan2(std::abs(b), std::abs(a));
            double phi = std::abs(b) > 0 ? std::arg(b) - std::arg(a) : 0.0;
            return {theta, phi, a, b, static_cast<int>(k)};
        }
        case InputKind::Fixed: {
            double theta = std::atan2(std::abs(policy.beta), std::abs(policy.alpha));
            double phi = std::abs(policy.beta) > 0 ? std::arg(policy.beta) - std::arg(policy.alpha) : 0.0;
            return {theta, phi, policy.alpha, policy.beta, 6};
        }
    }
    throw ConfigError("unknown input policy");
}

/// Bases for the seven non-random inputs (six stabilizer states plus the fixed one),
/// built on first use.
class BasisCache {
   public:
    BasisCache(const CodeLayout &code, const InputPolicy &policy) : code_(code), policy_(policy) {}

    const MetricBases &get(const DrawnInput &in) {
        std::lock_guard lock(mu_);
        auto &slot = slots_[static_cast<std::size_t>(in.cache_slot)];
        if (!slot) {
            slot = std::make_unique<MetricBases>(
                MetricBases::for_state(code_.encoded_data_state(in.alpha, in.beta), code_));
        }
        return *slot;
    }

   private:
    const CodeLayout &code_;
    InputPolicy policy_;
    std::mutex mu_;
    std::array<std::unique_ptr<MetricBases>, 7> slots_;
};

SyndromeSummary summarize(const SteaneSyndromeRecord &r) {
    SyndromeSummary s;
    s.z_detect_rounds = r.z_detect_rounds;
    s.x_detect_rounds = r.x_detect_rounds;
    s.corrections = r.corrections.str();
    s.injected = r.injected.str();
    return s;
}

SyndromeSummary summarize(const SingleShotResult &r) {
    SyndromeSummary s;
    for (const auto &round : r.rounds) {
        s.rounds.push_back(round.x_bits | (round.z_bits << 4));
    }
    s.consensus = r.consensus.x_bits | (r.consensus.z_bits << 4);
    s.corrections = r.corrections.str();
    s.injected = r.injected.str();
    return s;
}

std::vector<TrialRecord> run_trial_impl(
    const ExperimentConfig &config,
    std::size_t n_cycles,
    uint64_t master_seed,
    uint64_t trial_index,
    BasisCache *cache) {
    if (n_cycles == 0) {
        throw ConfigError("chain length must be at least 1");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const CodeLayout &code = layout_for(config.code);
    RngStream rng(master_seed, trial_index);
    DrawnInput in = draw_input(config.input, rng);
    StateVector state = code.encode(in.alpha, in.beta);

    MetricBases local;
    const MetricBases *bases = nullptr;
    if (cache != nullptr && in.cache_slot >= 0) {
        bases = &cache->get(in);
    } else {
        local = MetricBases::for_state(code.encoded_data_state(in.alpha, in.beta), code);
        bases = &local;
    }

    std::vector<TrialRecord> out;
    for (std::size_t c = 1; c <= n_cycles; c++) {
        TrialRecord rec;
        rec.code = config.code;
        rec.noise = config.noise;
        rec.master_seed = master_seed;
        rec.trial_index = trial_index;
        rec.cycle = c;
        rec.theta = in.theta;
        rec.phi = in.phi;
        rec.alpha = in.alpha;
        rec.beta = in.beta;
        rec.syndrome = run_memory_cycle(config.code, state, config.noise, rng);
        rec.metrics = compute_metrics(state, in.alpha, in.beta, *bases, code);
        require_bounds(rec.metrics);
        rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace

std::string input_kind_name(InputKind kind) {
    switch (kind) {
        case InputKind::Random:
            return "random";
        case InputKind::StabilizerSix:
            return "stabilizer-six";
        case InputKind::Fixed:
            return "fixed";
    }
    return "?";
}

InputKind parse_input_kind(const std::string &name) {
    if (name == "random") {
        return InputKind::Random;
    }
    if (name == "stabilizer-six") {
        return InputKind::StabilizerSix;
    }
    if (name == "fixed") {
        return InputKind::Fixed;
    }
    throw ConfigError("unknown input policy '" + name + "' (random, stabilizer-six, fixed)");
}

InputPolicy InputPolicy::fixed(Complex alpha, Complex beta) {
    double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > 1e-9) {
        throw ConfigError("fixed input: |alpha|^2 + |beta|^2 must be 1");
    }
    return {InputKind::Fixed, alpha, beta};
}

std::pair<Complex, Complex> stabilizer_input(std::size_t k) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (k) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {r, r};
        case 3:
            return {r, -r};
        case 4:
            return {r, Complex(0.0, r)};
        case 5:
            return {r, Complex(0.0, -r)};
        default:
            throw ConfigError("stabilizer input index must be 0..5");
    }
}

bool same_outcome(const TrialRecord &a, const TrialRecord &b) {
    auto same_metrics = [](const FailureMetrics &x, const FailureMetrics &y) {
        return x.p_fail_l1 == y.p_fail_l1 && x.p_fail_psi1 == y.p_fail_psi1 && x.p_fail_psi2 == y.p_fail_psi2 &&
               x.p_code == y.p_code && x.fidelity_sq == y.fidelity_sq && x.ratio == y.ratio &&
               x.ratio_defined == y.ratio_defined;
    };
    return a.code == b.code && a.noise == b.noise && a.master_seed == b.master_seed &&
           a.trial_index == b.trial_index && a.cycle == b.cycle && a.theta == b.theta && a.phi == b.phi &&
           a.alpha == b.alpha && a.beta == b.beta && same_metrics(a.metrics, b.metrics) && a.syndrome == b.syndrome;
}

const SteaneCode &steane_code() {
    static const SteaneCode code;
    return code;
}

const Surface17Code &surface17_code() {
    static const Surface17Code code;
    return code;
}

SyndromeSummary run_memory_cycle(
    CodeId code, StateVector &state, const NoiseModel &noise, RngStream &rng, std::span<const ScheduledFault> plan) {
    if (code == CodeId::Steane) {
        return summarize(steane_code().qec_cycle(state, noise, rng, plan));
    }
    return summarize(surface17_code().single_shot_cycle(state, noise, rng, plan));
}

TrialRecord run_trial(const ExperimentConfig &config, uint64_t master_seed, uint64_t trial_index) {
    criterion_slot(config.criterion);
    return run_trial_impl(config, 1, master_seed, trial_index, nullptr).front();
}

std::vector<TrialRecord> run_chain(
    const ExperimentConfig &config, std::size_t n_cycles, uint64_t master_seed, uint64_t trial_index) {
    return run_trial_impl(config, n_cycles, master_seed, trial_index, nullptr);
}

std::vector<CurvePoint> SweepSummary::curve() const {
    std::vector<CurvePoint> out;
    for (const auto &p : points) {
        out.push_back({p.parameter, p.failures, p.trials});
    }
    return out;
}

std::vector<CurvePoint> SweepSummary::curve_for(MetricId metric) const {
    std::size_t slot = criterion_slot(metric);
    std::vector<CurvePoint> out;
    for (const auto &p : points) {
        out.push_back({p.parameter, p.failures_by_metric[slot], p.trials});
    }
    return out;
}

SweepSummary run_sweep(
    const ExperimentConfig &config,
    std::span<const double> grid,
    uint64_t trials_per_point,
    uint64_t master_seed,
    const SweepOptions &options) {
    if (grid.empty()) {
        throw ConfigError("sweep grid is empty");
    }
    if (trials_per_point == 0) {
        throw ConfigError("trials per point must be at least 1");
    }
    const std::size_t slot = criterion_slot(config.criterion);
    std::size_t workers = options.workers;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<std::size_t>(std::min<uint64_t>(workers, trials_per_point));

    SweepSummary summary;
    summary.config = config;
    summary.master_seed = master_seed;
    summary.trials_per_point = trials_per_point;
    const CodeLayout &code = layout_for(config.code);

    for (std::size_t gi = 0; gi < grid.size(); gi++) {
        ExperimentConfig point_config = config;
        point_config.noise.strength = grid[gi];
        if (config.noise.kind == NoiseKind::StochasticPauli) {
            point_config.noise = NoiseModel::pauli(grid[gi]);
        } else if (config.noise.kind == NoiseKind::PulseArea) {
            point_config.noise = NoiseModel::pulse_area(grid[gi]);
        }
        BasisCache cache(code, config.input);

        struct Partial {
            HistogramSet hist;
            std::array<uint64_t, 3> failures{};
        };
        std::vector<Partial> partials(workers);
        std::vector<TrialRecord> records;
        if (options.on_record) {
            records.resize(trials_per_point);
        }
        std::atomic<uint64_t> next{0};
        std::atomic<uint64_t> done{0};
        std::exception_ptr error;
        std::mutex error_mu;

        auto work = [&](std::size_t w) {
            Partial &part = partials[w];
            while (true) {
                uint64_t i = next.fetch_add(1);
                if (i >= trials_per_point) {
                    return;
                }
                try {
                    TrialRecord rec = run_trial_impl(point_config, 1, master_seed, i, &cache).front();
                    part.hist.add(rec.metrics);
                    const std::array<double, 3> v = {
                        rec.metrics.p_fail_l1, rec.metrics.p_fail_psi1, rec.metrics.p_fail_psi2};
                    for (std::size_t k = 0; k < 3; k++) {
                        part.failures[k] += v[k] > config.threshold ? 1 : 0;
                    }
                    if (options.on_record) {
                        records[i] = std::move(rec);
                    }
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next.store(trials_per_point);
                    return;
                }
                uint64_t d = done.fetch_add(1) + 1;
                if (options.on_progress) {
                    options.on_progress(gi, d);
                }
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < workers; w++) {
                pool.emplace_back(work, w);
            }
            for (auto &t : pool) {
                t.join();
            }
        }
        if (error) {
            std::rethrow_exception(error);
        }

        SweepPoint point;
        point.parameter = grid[gi];
        point.trials = trials_per_point;
        for (const Partial &part : partials) {
            point.histograms.merge(part.hist);
            for (std::size_t k = 0; k < 3; k++) {
                point.failures_by_metric[k] += part.failures[k];
            }
        }
        point.failures = point.failures_by_metric[slot];
        point.ci = wilson_interval(point.failures, point.trials);
        summary.points.push_back(std::move(point));
        if (options.on_record) {
            for (const auto &r : records) {
                options.on_record(r);
            }
        }
    }
    return summary;
}

}  // namespace qecdist
