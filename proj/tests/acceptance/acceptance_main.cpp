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
// Acceptance run: one PASS/FAIL line per criterion. `--scale f` multiplies every trial count
// (for quick local checks only; the registered test runs at full size).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "qecdist/errors.hpp"
#include "qecdist/harness.hpp"
#include "test_util.hpp"

namespace {

using namespace qecdist;

int g_failures = 0;
double g_scale = 1.0;

void report(int criterion, bool pass, const std::string &detail) {
    std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    g_failures += pass ? 0 : 1;
}

std::string fmt(const char *f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

uint64_t scaled(uint64_t n) { return std::max<uint64_t>(100, static_cast<uint64_t>(std::llround(n * g_scale))); }

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Every record of every sweep goes through the bounds check; violations are tallied for C9.
uint64_t g_records = 0;
uint64_t g_bound_violations = 0;

SweepSummary sweep(const ExperimentConfig &c, const std::vector<double> &grid, uint64_t trials, uint64_t seed) {
    SweepOptions o;
    o.on_record = [](const TrialRecord &r) {
        g_records++;
        g_bound_violations += check_bounds(r.metrics).ok ? 0 : 1;
    };
    return run_sweep(c, grid, trials, seed, o);
}

ExperimentConfig config(CodeId code, NoiseModel noise, InputPolicy input, MetricId criterion) {
    ExperimentConfig c;
    c.code = code;
    c.noise = noise;
    c.input = input;
    c.criterion = criterion;
    c.threshold = 1e-6;
    return c;
}

// ---- criterion 9 pieces ----

struct Check {
    std::string name;
    bool ok;
};

bool noiseless_identity() {
    for (CodeId code : {CodeId::Steane, CodeId::Surface17}) {
        for (uint64_t i = 0; i < 20; i++) {
            auto m = run_trial(config(code, NoiseModel::none(), InputPolicy::random(), MetricId::PFailPsi1), 1, i).metrics;
            if (m.p_fail_l1 > 1e-10 || m.p_fail_psi1 > 1e-10 || m.p_fail_psi2 > 1e-10 || m.fidelity_sq < 1 - 1e-10) {
                return false;
            }
        }
    }
    return true;
}

bool single_faults_corrected() {
    int cases = 0;
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (std::size_t q = 0; q < 7; q++) {
            StateVector s = steane_code().encode(Complex(0.48, 0.36), Complex(0.0, 0.8));
            StateVector before = s;
            apply_pauli(s, PauliString::single(q, p));
            RngStream rng(1, q);
            steane_code().qec_cycle(s, NoiseModel::none(), rng);
            if (std::abs(std::norm(inner_product(s, before)) - 1.0) > 1e-10) {
                return false;
            }
            cases++;
        }
        for (std::size_t q = 0; q < 9; q++) {
            StateVector s = surface17_code().encode(Complex(0.48, 0.36), Complex(0.0, 0.8));
            StateVector before = s;
            FaultPlan plan = {{0, 0, PauliString::single(q, p)}};
            RngStream rng(2, q);
            surface17_code().single_shot_cycle(s, NoiseModel::none(), rng, plan);
            if (std::abs(std::norm(inner_product(s, before)) - 1.0) > 1e-10) {
                return false;
            }
            cases++;
        }
    }
    return cases == 48;
}

bool subspace_dimensions() {
    const auto &st = steane_layout();
    StateVector psi0 = st.encoded_data_state(std::cos(0.7), std::polar(std::sin(0.7), 1.1));
    bool ok = build_logical_subspace(st, SubspaceLevel::L).dimension() == 2 &&
              build_logical_subspace(st, SubspaceLevel::L1).dimension() == 44 &&
              build_psi_subspace(psi0, st, SubspaceLevel::Psi1).dimension() == 22 &&
              build_psi_subspace(psi0, st, SubspaceLevel::Psi2).dimension() == 64;
    // surface L+1 against the rank of the generated set
    const auto &sf = surface17_layout();
    auto [zero, one] = sf.logical_basis();
    std::vector<testing::VectorXc> gen;
    for (const PauliString &p : generating_paulis(sf, SubspaceLevel::L1)) {
        for (const StateVector *s : {&zero, &one}) {
            gen.push_back(testing::pauli_matrix(p, 9) * testing::to_eigen(*s));
        }
    }
    auto rank = testing::span_basis(gen).cols();
    return ok && rank == 48 && build_logical_subspace(sf, SubspaceLevel::L1).dimension() == 48;
}

bool table_golden() {
    static const int z_rows[3][7] = {{0, 1, 0, 1, 1, 0, 1}, {0, 0, 1, 1, 1, 1, 0}, {1, 0, 0, 1, 0, 1, 1}};
    static const int x_rows[3][7] = {{0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}, {1, 1, 1, 1, 0, 0, 0}};
    auto stabs = steane_code().stabilizers();
    RngStream rng(3, 0);
    int checks = 0;
    for (int half = 0; half < 2; half++) {
        for (std::size_t q = 0; q < 7; q++) {
            for (std::size_t row = 0; row < 3; row++) {
                StateVector s = steane_code().encode(1.0, 0.0);
                apply_pauli(s, PauliString::single(q, half == 0 ? Pauli::Z : Pauli::X));
                int bit = steane_code().measure_stabilizer(s, stabs[3 * half + row], NoiseModel::none(), rng);
                int expect = half == 0 ? z_rows[row][q] : x_rows[row][q];
                if (bit != expect) {
                    return false;
                }
                checks++;
            }
        }
    }
    return checks == 42;
}

bool degeneracy_equalities() {
    auto [zero, one] = surface17_layout().logical_basis();
    for (const StateVector *s : {&zero, &one}) {
        for (auto [a, b] : {std::pair{"X1", "X2"}, {"X6", "X7"}, {"Z0", "Z3"}, {"Z5", "Z8"}}) {
            StateVector u = *s;
            StateVector v = *s;
            apply_pauli(u, PauliString::parse(a));
            apply_pauli(v, PauliString::parse(b));
            if (max_abs_difference(u, v) > 1e-12) {
                return false;
            }
        }
    }
    return true;
}

bool determinism() {
    for (CodeId code : {CodeId::Steane, CodeId::Surface17}) {
        for (NoiseModel n : {NoiseModel::pulse_area(0.02), NoiseModel::pauli(0.01)}) {
            auto c = config(code, n, InputPolicy::random(), MetricId::PFailPsi1);
            for (uint64_t i = 0; i < 5; i++) {
                if (!same_outcome(run_trial(c, 77, i), run_trial(c, 77, i))) {
                    return false;
                }
            }
        }
    }
    auto c = config(CodeId::Steane, NoiseModel::pulse_area(0.01), InputPolicy::random(), MetricId::PFailPsi1);
    const std::vector<double> grid = {0.01, 0.02};
    SweepOptions one;
    one.workers = 1;
    SweepOptions four;
    four.workers = 4;
    SweepSummary a = run_sweep(c, grid, 200, 5, one);
    SweepSummary b = run_sweep(c, grid, 200, 5, four);
    for (std::size_t i = 0; i < grid.size(); i++) {
        if (!(a.points[i] == b.points[i])) {
            return false;
        }
    }
    return true;
}

void criterion_9() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> checks = {
        {"noiseless identity", noiseless_identity()},
        {"single-fault correction 21+27", single_faults_corrected()},
        {"subspace dimensions", subspace_dimensions()},
        {"syndrome table 42 golden", table_golden()},
        {"surface degeneracy equalities", degeneracy_equalities()},
        {"fault-tolerance check", surface17_code().verify_fault_tolerance().passed()},
        {"determinism", determinism()},
    };
    // bounds on a batch of noisy trials of every kind
    for (CodeId code : {CodeId::Steane, CodeId::Surface17}) {
        for (NoiseModel n : {NoiseModel::pulse_area(0.05), NoiseModel::pauli(0.02)}) {
            sweep(config(code, n, InputPolicy::random(), MetricId::PFailPsi1), {n.strength}, 200, 9);
        }
    }
    checks.push_back({"bounds on every trial", g_bound_violations == 0});
    bool ok = true;
    std::string failed;
    for (const auto &c : checks) {
        ok &= c.ok;
        if (!c.ok) {
            failed += " [" + c.name + "]";
        }
    }
    report(9, ok, "invariant suite, " + std::to_string(checks.size()) + " groups" + (ok ? "" : ", failed:" + failed) +
                      fmt(" (%.0f s)", elapsed(t0)));
}

// ---- criterion 7 ----

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    uint64_t bad = 0;
    uint64_t seen = 0;
    auto near01 = [](double v) { return v < 1e-9 || v > 1.0 - 1e-9; };
    SweepOptions o;
    o.on_record = [&](const TrialRecord &r) {
        const auto &m = r.metrics;
        seen++;
        bool ok = near01(m.p_fail_l1) && near01(m.p_fail_psi1) && near01(m.p_fail_psi2) && near01(m.p_code) &&
                  near01(m.fidelity_sq) && (!m.ratio_defined || near01(m.ratio));
        bad += ok ? 0 : 1;
    };
    const uint64_t n = scaled(10000);
    run_sweep(config(CodeId::Steane, NoiseModel::pauli(0.01), InputPolicy::stabilizer_six(), MetricId::PFailPsi1),
              std::vector<double>{0.01}, n / 2, 7, o);
    run_sweep(config(CodeId::Surface17, NoiseModel::pauli(0.001), InputPolicy::stabilizer_six(), MetricId::PFailPsi1),
              std::vector<double>{0.001}, n - n / 2, 7, o);
    report(7, bad == 0 && seen == n,
           std::to_string(seen) + " stabilizer-input Pauli trials, " + std::to_string(bad) +
               " with a metric farther than 1e-9 from {0, 1}" + fmt(" (%.0f s)", elapsed(t0)));
}

// ---- criterion 1 ----

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    SweepSummary s = sweep(config(CodeId::Steane, NoiseModel::pauli(0.0), InputPolicy::random(), MetricId::PFailL1),
                           {0.002, 0.005, 0.01}, scaled(100000), 101);
    auto curve = s.curve();
    std::string pts;
    for (const auto &p : curve) {
        pts += fmt(" %.3g", p.x) + fmt(":%.3e", p.fraction());
    }
    auto th = estimate_pseudothreshold(curve);
    bool pass = th && th->value >= 0.0025 && th->value <= 0.01;
    std::string detail = th ? fmt("p_th = %.4g", th->value) + fmt(" CI [%.4g", th->ci.low) + fmt(", %.4g]", th->ci.high)
                            : std::string("no crossing");
    report(1, pass, detail + " (target [0.0025, 0.01]); fractions" + pts + fmt(" (%.0f s)", elapsed(t0)));
}

// ---- criterion 2 ----

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    SweepSummary s =
        sweep(config(CodeId::Surface17, NoiseModel::pauli(0.0), InputPolicy::fixed(1.0, 0.0), MetricId::PFailL1),
              {2e-5, 4e-5, 8e-5}, scaled(1000000), 202);
    auto curve = s.curve();
    std::string pts;
    for (const auto &p : curve) {
        pts += fmt(" %.3g", p.x) + ":" + std::to_string(p.failures) + "/" + std::to_string(p.trials);
    }
    auto th = estimate_pseudothreshold(curve);
    bool pass = th && th->value >= 4e-5 / 3 && th->value <= 4e-5 * 3;
    std::string detail = th ? fmt("p_th = %.4g", th->value) + fmt(" CI [%.4g", th->ci.low) + fmt(", %.4g]", th->ci.high)
                            : std::string("no crossing of f = p on the grid");
    report(2, pass, detail + " (target [1.33e-05, 1.2e-04]); failures" + pts + fmt(" (%.0f s)", elapsed(t0)));
}

// ---- criteria 3 to 6 ----

SweepSummary pulse_sweep() {
    return sweep(config(CodeId::Steane, NoiseModel::pulse_area(0.0), InputPolicy::random(), MetricId::PFailPsi1),
                 {0.005, 0.0075, 0.01, 0.02, 0.05}, scaled(100000), 303);
}

const SweepPoint &at(const SweepSummary &s, double sigma) {
    for (const auto &p : s.points) {
        if (p.parameter == sigma) {
            return p;
        }
    }
    throw std::logic_error("missing grid point");
}

void criterion_3(const SweepSummary &s) {
    std::vector<std::pair<double, double>> pts;
    std::string modes;
    for (double sigma : {0.005, 0.01, 0.02, 0.05}) {
        auto m = at(s, sigma).histograms[MetricId::PFailPsi1].mode();
        if (m) {
            pts.emplace_back(sigma, *m);
            modes += fmt(" %.3g", sigma) + fmt(":%.3e", *m);
        }
    }
    if (pts.size() < 3) {
        report(3, false, "fewer than 3 occupied histograms");
        return;
    }
    PowerLawFit f = fit_power_law(pts);
    bool pass = std::abs(f.exponent - 4.0) <= 0.5 && f.prefactor >= 5.0 / 3 && f.prefactor <= 15.0;
    report(3, pass,
           fmt("mode(P_psi+1) = %.3g", f.prefactor) + fmt(" sigma^%.3f", f.exponent) +
               " (target exponent 4 +- 0.5, prefactor in [1.67, 15]); modes" + modes);
}

void criterion_4(const SweepSummary &s) {
    std::vector<std::pair<double, double>> pts;
    std::string fr;
    for (double sigma : {0.005, 0.0075, 0.01}) {
        const auto &p = at(s, sigma);
        fr += fmt(" %.4g", sigma) + fmt(":%.3e", p.fraction());
        if (p.failures > 0) {
            pts.emplace_back(sigma, p.fraction());
        }
    }
    std::string rest;
    for (double sigma : {0.02, 0.05}) {
        rest += fmt(" %.3g", sigma) + fmt(":%.3e", at(s, sigma).fraction());
    }
    if (pts.size() < 3) {
        report(4, false, "fewer than 3 nonzero failure fractions at small sigma;" + fr);
        return;
    }
    PowerLawFit f = fit_power_law(pts);
    bool pass = std::abs(f.exponent - 2.5) <= 0.5;
    report(4, pass,
           fmt("failure fraction = %.3g", f.prefactor) + fmt(" sigma^%.3f", f.exponent) +
               " over sigma <= 0.01 (target exponent 2.5 +- 0.5); fractions" + fr + "; larger sigma" + rest);
}

void criterion_5(const SweepSummary &s) {
    const auto &h5 = at(s, 0.005).histograms[MetricId::RatioDeficit];
    auto m5 = h5.mode();
    bool mode_ok = m5 && *m5 >= 1e-4 / 3 && *m5 <= 3e-4;
    std::vector<std::pair<double, double>> pts;
    std::string modes;
    for (double sigma : {0.005, 0.01, 0.02, 0.05}) {
        const auto &h = at(s, sigma).histograms[MetricId::RatioDeficit];
        auto m = h.mode();
        modes += fmt(" %.3g:", sigma) + (m ? fmt("%.3e", *m) : std::string("none")) +
                 fmt("(zero mass %.3f)", static_cast<double>(h.zero_count()) / static_cast<double>(h.total()));
        if (m) {
            pts.emplace_back(sigma, *m);
        }
    }
    bool exp_ok = false;
    std::string fit = "no fit";
    if (pts.size() >= 3) {
        PowerLawFit f = fit_power_law(pts);
        exp_ok = std::abs(f.exponent - 4.0) <= 0.5;
        fit = fmt("deficit mode = %.3g", f.prefactor) + fmt(" sigma^%.3f", f.exponent);
    }
    report(5, mode_ok && exp_ok,
           std::string("mode at sigma=0.005 ") + (m5 ? fmt("%.3e", *m5) : std::string("none")) +
               " (target [3.3e-05, 3e-04]); " + fit + " (target exponent 4 +- 0.5); modes" + modes);
}

void criterion_6(const SweepSummary &s) {
    auto fit = fit_lognormal(at(s, 0.01).histograms[MetricId::PFailPsi1]);
    bool pass = fit && fit->coverage >= 0.6 && fit->coverage <= 0.9;
    report(6, pass,
           fit ? fmt("coverage %.3f", fit->coverage) + fmt(" (a = %.3g", fit->a) + fmt(", b = %.3g)", fit->b) +
                     " (target [0.6, 0.9])"
               : std::string("no lognormal fit"));
}

// ---- criterion 8 ----

double psi1_fraction(const SweepPoint &p) {
    return static_cast<double>(p.failures_by_metric[1]) / static_cast<double>(p.trials);
}

/// Pauli rate whose P_psi+1 failure fraction equals the target, from a log-log secant
/// through two pilot points.
double matched_pauli_rate(double target) {
    auto c = config(CodeId::Steane, NoiseModel::pauli(0.0), InputPolicy::random(), MetricId::PFailPsi1);
    const std::vector<double> pilot = {2e-4, 2e-3};
    SweepSummary s = sweep(c, pilot, scaled(20000), 808);
    double f0 = psi1_fraction(s.points[0]);
    double f1 = psi1_fraction(s.points[1]);
    if (f0 <= 0 || f1 <= 0) {
        return pilot[1] * target / std::max(f1, 1e-300);
    }
    double slope = std::log(f1 / f0) / std::log(pilot[1] / pilot[0]);
    return pilot[1] * std::pow(target / f1, 1.0 / slope);
}

void criterion_8(const SweepSummary &pulse) {
    auto t0 = std::chrono::steady_clock::now();
    const SweepPoint &pp = at(pulse, 0.01);
    double target = pp.fraction();
    double p = matched_pauli_rate(target);
    SweepSummary pauli = sweep(config(CodeId::Steane, NoiseModel::pauli(0.0), InputPolicy::random(), MetricId::PFailPsi1),
                               {p}, scaled(100000), 809);
    const SweepPoint &mp = pauli.points[0];
    const LogHistogram &hp = mp.histograms[MetricId::PFailPsi1];
    double point_mass = static_cast<double>(hp.zero_count() + hp.one_count()) / static_cast<double>(hp.total());
    std::size_t occupied = pp.histograms[MetricId::PFailPsi1].occupied_interior_bins();
    bool pass = point_mass >= 0.99 && occupied >= 10;
    report(8, pass,
           fmt("P_psi+1 failure fraction %.3e", target) + fmt(" at pulse-area sigma = 0.01, %.3e", psi1_fraction(mp)) +
               fmt(" at matched Pauli p = %.3g", p) + fmt("; Pauli has %.4f of its mass in the point masses", point_mass) +
               "; pulse-area occupies " + std::to_string(occupied) + " interior bins (targets >= 0.99 and >= 10)" +
               fmt(" (%.0f s)", elapsed(t0)));
}

}  // namespace

int main(int argc, char **argv) {
    for (int i = 1; i < argc; i++) {
        if (std::strcmp(argv[i], "--scale") == 0 && i + 1 < argc) {
            g_scale = std::atof(argv[++i]);
        }
    }
    std::printf("acceptance run, trial scale %.3g\n", g_scale);
    std::fflush(stdout);
    try {
        criterion_9();
        criterion_7();
        criterion_1();
        auto t0 = std::chrono::steady_clock::now();
        SweepSummary pulse = pulse_sweep();
        std::printf("pulse-area sweep done (%.0f s)\n", elapsed(t0));
        criterion_3(pulse);
        criterion_4(pulse);
        criterion_5(pulse);
        criterion_6(pulse);
        criterion_8(pulse);
        criterion_2();
    } catch (const std::exception &e) {
        std::printf("aborted: %s\n", e.what());
        return 2;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
