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
#include "qecdist/io.hpp"

#include <sstream>

#include <json.hpp>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

ordered metrics_json(const FailureMetrics &m) {
    ordered j;
    j["p_fail_l1"] = m.p_fail_l1;
    j["p_fail_psi1"] = m.p_fail_psi1;
    j["p_fail_psi2"] = m.p_fail_psi2;
    j["p_code"] = m.p_code;
    j["fidelity_sq"] = m.fidelity_sq;
    if (m.ratio_defined) {
        j["ratio"] = m.ratio;
    } else {
        j["ratio"] = nullptr;
    }
    return j;
}

ordered experiment_json(const ExperimentConfig &c) {
    ordered j;
    j["code"] = code_name(c.code);
    j["noise"] = noise_kind_name(c.noise.kind);
    j["strength"] = c.noise.strength;
    j["input"] = input_kind_name(c.input.kind);
    if (c.input.kind == InputKind::Fixed) {
        j["alpha"] = {c.input.alpha.real(), c.input.alpha.imag()};
        j["beta"] = {c.input.beta.real(), c.input.beta.imag()};
    }
    j["criterion"] = metric_name(c.criterion);
    j["threshold"] = c.threshold;
    return j;
}

ExperimentConfig experiment_from_json(const json &j) {
    ExperimentConfig c;
    c.code = parse_code_id(j.at("code").get<std::string>());
    c.noise.kind = parse_noise_kind(j.at("noise").get<std::string>());
    c.noise.strength = j.at("strength").get<double>();
    c.input.kind = parse_input_kind(j.at("input").get<std::string>());
    if (c.input.kind == InputKind::Fixed) {
        auto a = j.at("alpha");
        auto b = j.at("beta");
        c.input.alpha = Complex(a.at(0).get<double>(), a.at(1).get<double>());
        c.input.beta = Complex(b.at(0).get<double>(), b.at(1).get<double>());
    }
    c.criterion = parse_metric_id(j.at("criterion").get<std::string>());
    c.threshold = j.at("threshold").get<double>();
    return c;
}

ordered histogram_json(const LogHistogram &h) {
    ordered j;
    j["zero"] = h.zero_count();
    j["one"] = h.one_count();
    j["bins"] = h.bins();
    return j;
}

LogHistogram histogram_from_json(const json &j) {
    LogHistogram h;
    auto bins = j.at("bins").get<std::vector<uint64_t>>();
    if (bins.size() != LogHistogram::kLogBins) {
        throw ConfigError("summary: histogram must have 60 bins");
    }
    std::array<uint64_t, LogHistogram::kLogBins> arr{};
    std::copy(bins.begin(), bins.end(), arr.begin());
    h.set_counts(j.at("zero").get<uint64_t>(), j.at("one").get<uint64_t>(), arr);
    return h;
}

}  // namespace

std::string trial_record_json(const TrialRecord &r) {
    ordered j;
    j["schema_version"] = kSchemaVersion;
    j["code"] = code_name(r.code);
    j["noise"] = noise_kind_name(r.noise.kind);
    j["strength"] = r.noise.strength;
    j["master_seed"] = r.master_seed;
    j["trial_index"] = r.trial_index;
    j["cycle"] = r.cycle;
    j["theta"] = r.theta;
    j["phi"] = r.phi;
    j["alpha"] = {r.alpha.real(), r.alpha.imag()};
    j["beta"] = {r.beta.real(), r.beta.imag()};
    j["metrics"] = metrics_json(r.metrics);
    ordered s;
    if (r.code == CodeId::Steane) {
        s["z_detect_rounds"] = r.syndrome.z_detect_rounds;
        s["x_detect_rounds"] = r.syndrome.x_detect_rounds;
    } else {
        s["rounds"] = r.syndrome.rounds;
        s["consensus"] = r.syndrome.consensus;
    }
    s["corrections"] = r.syndrome.corrections;
    s["injected"] = r.syndrome.injected;
    j["syndrome"] = s;
    j["wall_time_s"] = r.wall_time_s;
    return j.dump();
}

std::string sweep_summary_json(const SweepSummary &summary, const std::string &run_config_json) {
    ordered j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = experiment_json(summary.config);
    if (!run_config_json.empty()) {
        j["run_config"] = ordered::parse(run_config_json);
    }
    j["master_seed"] = summary.master_seed;
    j["trials_per_point"] = summary.trials_per_point;
    ordered pts = ordered::array();
    for (const auto &p : summary.points) {
        ordered pj;
        pj["parameter"] = p.parameter;
        pj["trials"] = p.trials;
        pj["failures"] = p.failures;
        pj["fraction"] = p.fraction();
        pj["ci_low"] = p.ci.low;
        pj["ci_high"] = p.ci.high;
        pj["failures_p_fail_l1"] = p.failures_by_metric[0];
        pj["failures_p_fail_psi1"] = p.failures_by_metric[1];
        pj["failures_p_fail_psi2"] = p.failures_by_metric[2];
        ordered hs;
        hs["trials"] = p.histograms.trials;
        hs["ratio_undefined"] = p.histograms.ratio_undefined;
        for (MetricId id : all_metrics()) {
            hs[metric_name(id)] = histogram_json(p.histograms[id]);
        }
        pj["histograms"] = hs;
        pts.push_back(pj);
    }
    j["points"] = pts;
    return j.dump(2) + "\n";
}

SweepSummary parse_sweep_summary(const std::string &text) {
    try {
        json j = json::parse(text);
        if (j.at("schema_version").get<int>() != kSchemaVersion) {
            throw ConfigError("summary: unsupported schema_version");
        }
        SweepSummary s;
        s.config = experiment_from_json(j.at("config"));
        s.master_seed = j.at("master_seed").get<uint64_t>();
        s.trials_per_point = j.at("trials_per_point").get<uint64_t>();
        for (const auto &pj : j.at("points")) {
            SweepPoint p;
            p.parameter = pj.at("parameter").get<double>();
            p.trials = pj.at("trials").get<uint64_t>();
            p.failures = pj.at("failures").get<uint64_t>();
            p.ci = {pj.at("ci_low").get<double>(), pj.at("ci_high").get<double>()};
            p.failures_by_metric = {
                pj.at("failures_p_fail_l1").get<uint64_t>(),
                pj.at("failures_p_fail_psi1").get<uint64_t>(),
                pj.at("failures_p_fail_psi2").get<uint64_t>()};
            const auto &hs = pj.at("histograms");
            p.histograms.trials = hs.at("trials").get<uint64_t>();
            p.histograms.ratio_undefined = hs.at("ratio_undefined").get<uint64_t>();
            for (MetricId id : all_metrics()) {
                p.histograms[id] = histogram_from_json(hs.at(metric_name(id)));
            }
            s.points.push_back(std::move(p));
        }
        return s;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("summary: ") + e.what());
    }
}

std::string embedded_run_config(const std::string &summary_text) {
    try {
        ordered j = ordered::parse(summary_text);
        if (j.contains("run_config")) {
            return j["run_config"].dump();
        }
        return {};
    } catch (const json::exception &e) {
        throw ConfigError(std::string("summary: ") + e.what());
    }
}

std::string sweep_histograms_csv(const SweepSummary &summary) {
    std::ostringstream out;
    out.precision(17);
    bool header = true;
    for (const auto &p : summary.points) {
        std::istringstream rows(p.histograms.csv());
        std::string line;
        bool first = true;
        while (std::getline(rows, line)) {
            if (first) {
                first = false;
                if (header) {
                    out << "parameter," << line << '\n';
                    header = false;
                }
                continue;
            }
            out << p.parameter << ',' << line << '\n';
        }
    }
    return out.str();
}

}  // namespace qecdist
