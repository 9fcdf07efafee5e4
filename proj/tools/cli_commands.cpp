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
#include "cli_commands.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>

#include "qecdist/errors.hpp"
#include "qecdist/io.hpp"

namespace qecdist::cli {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream o(path, std::ios::binary);
    if (!o) {
        throw UsageError("output: cannot write '" + path + "'");
    }
    o << text;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

int cmd_trial(const RunConfig &c, std::ostream &out) {
    TrialRecord r = run_trial(c.experiment(), c.seed, c.index);
    out << trial_record_json(r) << "\n";
    return kExitOk;
}

int cmd_chain(const RunConfig &c, std::ostream &out) {
    auto records = run_chain(c.experiment(), c.cycles, c.seed, c.index);
    out << "# " << code_name(c.code) << " " << c.experiment().noise.str() << " seed=" << c.seed
        << " index=" << c.index << "\n";
    out << std::left << std::setw(6) << "cycle" << std::setw(13) << "p_fail_l1" << std::setw(13) << "p_fail_psi1"
        << std::setw(13) << "p_fail_psi2" << std::setw(13) << "p_code" << "fidelity_sq\n";
    for (const auto &r : records) {
        const auto &m = r.metrics;
        out << std::setw(6) << r.cycle << std::setw(13) << sci(m.p_fail_l1) << std::setw(13) << sci(m.p_fail_psi1)
            << std::setw(13) << sci(m.p_fail_psi2) << std::setw(13) << sci(m.p_code) << sci(m.fidelity_sq) << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const RunConfig &c, std::ostream &out, std::ostream &err) {
    std::string prefix = c.output.empty() ? "sweep" : c.output;
    std::ofstream records;
    SweepOptions opts;
    opts.workers = c.workers;
    if (!c.records.empty()) {
        records.open(c.records, std::ios::binary);
        if (!records) {
            throw UsageError("records: cannot write '" + c.records + "'");
        }
        opts.on_record = [&records](const TrialRecord &r) { records << trial_record_json(r) << "\n"; };
    }
    uint64_t report_every = std::max<uint64_t>(c.trials / 10, 1);
    opts.on_progress = [&err, &c, report_every](std::size_t point, uint64_t done) {
        if (done % report_every == 0 || done == c.trials) {
            static std::mutex m;
            std::lock_guard<std::mutex> lock(m);
            err << "point " << point << ": " << done << "/" << c.trials << "\n";
        }
    };
    SweepSummary s = run_sweep(c.experiment(), c.grid, c.trials, c.seed, opts);

    write_file(prefix + ".summary.json", sweep_summary_json(s, config_json(c)));
    write_file(prefix + ".histograms.csv", sweep_histograms_csv(s));

    out << std::left << std::setw(13) << "parameter" << std::setw(10) << "trials" << std::setw(10) << "failures"
        << std::setw(13) << "fraction" << std::setw(13) << "ci_low" << std::setw(13) << "ci_high" << "l1/psi1/psi2\n";
    for (const auto &p : s.points) {
        out << std::setw(13) << sci(p.parameter) << std::setw(10) << p.trials << std::setw(10) << p.failures
            << std::setw(13) << sci(p.fraction()) << std::setw(13) << sci(p.ci.low) << std::setw(13)
            << sci(p.ci.high) << p.failures_by_metric[0] << "/" << p.failures_by_metric[1] << "/"
            << p.failures_by_metric[2] << "\n";
    }
    out << "wrote " << prefix << ".summary.json, " << prefix << ".histograms.csv\n";
    return kExitOk;
}

int cmd_ft_check(const RunConfig &c, std::ostream &out) {
    if (c.code != CodeId::Surface17) {
        throw UsageError("code: ft-check supports surface17 only");
    }
    FaultToleranceReport report = surface17_code().verify_fault_tolerance();
    out << report.str() << "\n";
    return report.passed() ? kExitOk : kExitInvariant;
}

void analyze_threshold(const SweepSummary &s, std::ostream &out) {
    for (MetricId m : {MetricId::PFailL1, MetricId::PFailPsi1, MetricId::PFailPsi2}) {
        auto curve = s.curve_for(m);
        auto th = estimate_pseudothreshold(curve);
        out << "threshold " << metric_name(m) << ": ";
        if (th) {
            out << sci(th->value) << " [" << sci(th->ci.low) << ", " << sci(th->ci.high) << "]\n";
        } else {
            out << "no crossing\n";
        }
    }
}

void analyze_power_law(const SweepSummary &s, std::ostream &out) {
    std::vector<std::pair<double, double>> fractions;
    std::vector<std::pair<double, double>> modes;
    for (const auto &p : s.points) {
        if (p.failures > 0) {
            fractions.emplace_back(p.parameter, p.fraction());
        }
        auto mode = p.histograms[MetricId::PFailPsi1].mode();
        if (mode && *mode > 0.0) {
            modes.emplace_back(p.parameter, *mode);
        }
    }
    auto report = [&out](const char *what, const std::vector<std::pair<double, double>> &pts) {
        out << "power-law " << what << ": ";
        if (pts.size() < 3) {
            out << "needs at least 3 nonzero points\n";
            return;
        }
        PowerLawFit f = fit_power_law(pts);
        out << "prefactor " << sci(f.prefactor) << " exponent " << std::fixed << std::setprecision(3) << f.exponent
            << std::defaultfloat << " residual " << sci(f.residual) << "\n";
    };
    report("failure fraction", fractions);
    report("p_fail_psi1 mode", modes);
}

void analyze_lognormal(const SweepSummary &s, std::ostream &out) {
    for (const auto &p : s.points) {
        out << "lognormal " << metric_name(MetricId::PFailPsi1) << " at " << sci(p.parameter) << ": ";
        auto fit = fit_lognormal(p.histograms[MetricId::PFailPsi1]);
        if (fit) {
            out << "a " << sci(fit->a) << " b " << sci(fit->b) << " coverage " << std::fixed << std::setprecision(3)
                << fit->coverage << std::defaultfloat << "\n";
        } else {
            out << "no fit\n";
        }
    }
}

int cmd_analyze(const RunConfig &c, std::ostream &out) {
    SweepSummary s;
    try {
        s = parse_sweep_summary(read_file(c.summary));
    } catch (const ConfigError &e) {
        throw UsageError(std::string("summary: ") + e.what());
    }
    out << "# " << code_name(s.config.code) << " " << noise_kind_name(s.config.noise.kind) << " trials/point "
        << s.trials_per_point << " seed " << s.master_seed << "\n";
    if (c.fit == "all" || c.fit == "threshold") {
        analyze_threshold(s, out);
    }
    if (c.fit == "all" || c.fit == "power-law") {
        analyze_power_law(s, out);
    }
    if (c.fit == "all" || c.fit == "lognormal") {
        analyze_lognormal(s, out);
    }
    return kExitOk;
}

}  // namespace

int dispatch(const RunConfig &c, std::ostream &out, std::ostream &err) {
    try {
        if (c.command == "trial") {
            return cmd_trial(c, out);
        }
        if (c.command == "chain") {
            return cmd_chain(c, out);
        }
        if (c.command == "sweep") {
            return cmd_sweep(c, out, err);
        }
        if (c.command == "ft-check") {
            return cmd_ft_check(c, out);
        }
        if (c.command == "analyze") {
            return cmd_analyze(c, out);
        }
        err << "error: unknown command '" << c.command << "'\n";
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error &e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::runtime_error &e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
}

int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig config;
    try {
        config = parse_command_line(argc, argv);
    } catch (const HelpRequested &h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return dispatch(config, out, err);
}

}  // namespace qecdist::cli
