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
#include "cli_config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "qecdist/errors.hpp"

namespace qecdist::cli {

namespace {

std::string trim(const std::string &s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        a++;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        b--;
    }
    return s.substr(a, b - a);
}

std::string unquote(const std::string &s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

std::string fmt_double(double v) {
    std::ostringstream o;
    o << std::setprecision(17) << v;
    return o.str();
}

double parse_double(const std::string &key, const std::string &text) {
    std::string t = trim(text);
    try {
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) {
            throw std::invalid_argument("trailing");
        }
        return v;
    } catch (const std::exception &) {
        throw UsageError(key + ": '" + text + "' is not a number");
    }
}

uint64_t parse_uint(const std::string &key, const std::string &text) {
    std::string t = trim(text);
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
        throw UsageError(key + ": '" + text + "' is not a non-negative integer");
    }
    return v;
}

/// "[a, b]" or "a,b" -> items.
std::vector<std::string> split_list(std::string text) {
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') {
            throw UsageError("unterminated list '" + text + "'");
        }
        text = text.substr(1, text.size() - 2);
    }
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

Complex parse_complex(const std::string &key, const std::string &text) {
    auto parts = split_list(text);
    if (parts.size() == 1) {
        return {parse_double(key, parts[0]), 0.0};
    }
    if (parts.size() == 2) {
        return {parse_double(key, parts[0]), parse_double(key, parts[1])};
    }
    throw UsageError(key + ": expected a number or [re, im]");
}

std::string fmt_complex(Complex c) { return "[" + fmt_double(c.real()) + ", " + fmt_double(c.imag()) + "]"; }

template <typename F>
auto rethrow_as_usage(const std::string &key, F &&f) {
    try {
        return f();
    } catch (const ConfigError &e) {
        throw UsageError(key + ": " + e.what());
    }
}

const std::vector<std::string> kCommands = {"trial", "chain", "sweep", "ft-check", "analyze"};

const std::map<std::string, std::string> kCommandHelp = {
    {"trial", "run one trial and print its record as JSON"},
    {"chain", "feed one trial through several QEC cycles, one row per cycle"},
    {"sweep", "Monte Carlo sweep over a noise grid, writes summary and histogram artifacts"},
    {"ft-check", "inject every single ancilla fault into the surface-17 schedule"},
    {"analyze", "threshold, power-law and lognormal fits on a stored summary"},
};

using Setter = std::function<void(RunConfig &, const std::string &key, const std::string &value)>;

const std::map<std::string, Setter> &setters() {
    static const std::map<std::string, Setter> s = {
        {"command",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             if (std::find(kCommands.begin(), kCommands.end(), v) == kCommands.end()) {
                 throw UsageError(k + ": unknown command '" + v + "'");
             }
             c.command = v;
         }},
        {"code",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             c.code = rethrow_as_usage(k, [&] { return parse_code_id(v); });
         }},
        {"input",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             c.input = rethrow_as_usage(k, [&] { return parse_input_kind(v); });
         }},
        {"alpha", [](RunConfig &c, const std::string &k, const std::string &v) { c.alpha = parse_complex(k, v); }},
        {"beta", [](RunConfig &c, const std::string &k, const std::string &v) { c.beta = parse_complex(k, v); }},
        {"seed", [](RunConfig &c, const std::string &k, const std::string &v) { c.seed = parse_uint(k, v); }},
        {"index", [](RunConfig &c, const std::string &k, const std::string &v) { c.index = parse_uint(k, v); }},
        {"cycles", [](RunConfig &c, const std::string &k, const std::string &v) { c.cycles = parse_uint(k, v); }},
        {"output", [](RunConfig &c, const std::string &, const std::string &v) { c.output = v; }},
        {"records", [](RunConfig &c, const std::string &, const std::string &v) { c.records = v; }},
        {"summary", [](RunConfig &c, const std::string &, const std::string &v) { c.summary = v; }},
        {"fit",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             if (v != "all" && v != "lognormal" && v != "power-law" && v != "threshold") {
                 throw UsageError(k + ": expected all, lognormal, power-law or threshold");
             }
             c.fit = v;
         }},
        {"workers", [](RunConfig &c, const std::string &k, const std::string &v) { c.workers = parse_uint(k, v); }},
        {"noise.kind",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             c.noise = rethrow_as_usage(k, [&] { return parse_noise_kind(v); });
         }},
        {"noise.grid",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             std::vector<double> g;
             for (const auto &item : split_list(v)) {
                 g.push_back(parse_double(k, item));
             }
             if (g.empty()) {
                 throw UsageError(k + ": grid must not be empty");
             }
             c.grid = g;
         }},
        {"sweep.trials", [](RunConfig &c, const std::string &k, const std::string &v) { c.trials = parse_uint(k, v); }},
        {"sweep.criterion",
         [](RunConfig &c, const std::string &k, const std::string &v) {
             c.criterion = rethrow_as_usage(k, [&] { return parse_metric_id(v); });
         }},
        {"sweep.threshold",
         [](RunConfig &c, const std::string &k, const std::string &v) { c.threshold = parse_double(k, v); }},
    };
    return s;
}

}  // namespace

ExperimentConfig RunConfig::experiment() const {
    ExperimentConfig e;
    e.code = code;
    e.noise = noise_at(grid.empty() ? 0.0 : grid.front());
    switch (input) {
        case InputKind::Random:
            e.input = InputPolicy::random();
            break;
        case InputKind::StabilizerSix:
            e.input = InputPolicy::stabilizer_six();
            break;
        case InputKind::Fixed:
            e.input = InputPolicy::fixed(alpha, beta);
            break;
    }
    e.criterion = criterion;
    e.threshold = threshold;
    return e;
}

NoiseModel RunConfig::noise_at(double strength) const {
    switch (noise) {
        case NoiseKind::None:
            return NoiseModel::none();
        case NoiseKind::StochasticPauli:
            return NoiseModel::pauli(strength);
        case NoiseKind::PulseArea:
            return NoiseModel::pulse_area(strength);
    }
    return NoiseModel::none();
}

KeyValues parse_config_text(const std::string &text) {
    KeyValues out;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[' && line.find('=') == std::string::npos) {
            if (line.back() != ']') {
                throw UsageError("config line " + std::to_string(lineno) + ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "noise" && section != "sweep") {
                throw UsageError("config line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = unquote(trim(line.substr(eq + 1)));
        out[section.empty() ? key : section + "." + key] = value;
    }
    return out;
}

void apply_values(RunConfig &config, const KeyValues &values) {
    const auto &s = setters();
    for (const auto &[key, value] : values) {
        auto it = s.find(key);
        if (it == s.end()) {
            throw UsageError("unknown key '" + key + "'");
        }
        it->second(config, key, value);
    }
}

void validate(const RunConfig &c) {
    if (c.trials < 1) {
        throw UsageError("sweep.trials: must be at least 1");
    }
    if (c.cycles < 1) {
        throw UsageError("cycles: must be at least 1");
    }
    if (!(c.threshold > 0.0 && c.threshold < 1.0)) {
        throw UsageError("sweep.threshold: must lie in (0, 1)");
    }
    if (c.criterion != MetricId::PFailL1 && c.criterion != MetricId::PFailPsi1 && c.criterion != MetricId::PFailPsi2) {
        throw UsageError("sweep.criterion: must be p_fail_l1, p_fail_psi1 or p_fail_psi2");
    }
    if (c.grid.empty()) {
        throw UsageError("noise.grid: must not be empty");
    }
    if (c.noise != NoiseKind::None) {
        for (double v : c.grid) {
            if (!(v > 0.0)) {
                throw UsageError("noise.grid: values must be positive");
            }
            if (c.noise == NoiseKind::StochasticPauli && v > 1.0) {
                throw UsageError("noise.grid: p must not exceed 1");
            }
        }
    }
    if (c.input == InputKind::Fixed && std::abs(std::norm(c.alpha) + std::norm(c.beta) - 1.0) > 1e-9) {
        throw UsageError("alpha, beta: |alpha|^2 + |beta|^2 must be 1");
    }
    if (c.command == "analyze" && c.summary.empty()) {
        throw UsageError("summary: analyze needs --summary <file>");
    }
}

std::string dump_config(const RunConfig &c) {
    std::ostringstream o;
    o << "command = \"" << c.command << "\"\n";
    o << "code = \"" << code_name(c.code) << "\"\n";
    o << "input = \"" << input_kind_name(c.input) << "\"\n";
    o << "alpha = " << fmt_complex(c.alpha) << "\n";
    o << "beta = " << fmt_complex(c.beta) << "\n";
    o << "seed = " << c.seed << "\n";
    o << "index = " << c.index << "\n";
    o << "cycles = " << c.cycles << "\n";
    o << "output = \"" << c.output << "\"\n";
    o << "records = \"" << c.records << "\"\n";
    o << "summary = \"" << c.summary << "\"\n";
    o << "fit = \"" << c.fit << "\"\n";
    o << "workers = " << c.workers << "\n";
    o << "\n[noise]\n";
    o << "kind = \"" << noise_kind_name(c.noise) << "\"\n";
    o << "grid = [";
    for (std::size_t i = 0; i < c.grid.size(); i++) {
        o << (i ? ", " : "") << fmt_double(c.grid[i]);
    }
    o << "]\n";
    o << "\n[sweep]\n";
    o << "trials = " << c.trials << "\n";
    o << "criterion = \"" << metric_name(c.criterion) << "\"\n";
    o << "threshold = " << fmt_double(c.threshold) << "\n";
    return o.str();
}

std::string config_json(const RunConfig &c) {
    nlohmann::ordered_json j;
    j["command"] = c.command;
    j["code"] = code_name(c.code);
    j["input"] = input_kind_name(c.input);
    j["alpha"] = {c.alpha.real(), c.alpha.imag()};
    j["beta"] = {c.beta.real(), c.beta.imag()};
    j["seed"] = c.seed;
    j["index"] = c.index;
    j["cycles"] = c.cycles;
    j["output"] = c.output;
    j["records"] = c.records;
    j["summary"] = c.summary;
    j["fit"] = c.fit;
    j["workers"] = c.workers;
    j["noise"] = {{"kind", noise_kind_name(c.noise)}, {"grid", c.grid}};
    j["sweep"] = {{"trials", c.trials}, {"criterion", metric_name(c.criterion)}, {"threshold", c.threshold}};
    return j.dump();
}

RunConfig parse_command_line(int argc, const char *const *argv) {
    CLI::App app{"Failure distributions of d=3 QEC memory circuits under Pauli and pulse-area noise", "qecdist"};
    app.require_subcommand(1);

    // Raw flag values; applied after the config file so flags win.
    std::map<std::string, std::string> raw;
    std::string config_path;
    struct Flag {
        const char *name;
        const char *key;
        const char *help;
    };
    static const Flag flags[] = {
        {"--code", "code", "steane or surface17"},
        {"--noise", "noise.kind", "none, pauli or pulse-area"},
        {"--grid", "noise.grid", "comma-separated noise strengths"},
        {"--p", "noise.grid", "alias of --grid for pauli noise"},
        {"--sigma", "noise.grid", "alias of --grid for pulse-area noise"},
        {"--trials", "sweep.trials", "trials per grid point"},
        {"--criterion", "sweep.criterion", "p_fail_l1, p_fail_psi1 or p_fail_psi2"},
        {"--threshold", "sweep.threshold", "failure threshold on the criterion metric"},
        {"--input", "input", "random, stabilizer-six or fixed"},
        {"--alpha", "alpha", "fixed input amplitude of |0_L> (re or re,im)"},
        {"--beta", "beta", "fixed input amplitude of |1_L> (re or re,im)"},
        {"--seed", "seed", "master seed"},
        {"--index", "index", "trial index (trial, chain)"},
        {"--cycles", "cycles", "chain length"},
        {"--output", "output", "artifact path prefix"},
        {"--records", "records", "JSON-lines trial record file"},
        {"--summary", "summary", "stored sweep summary (analyze)"},
        {"--fit", "fit", "all, lognormal, power-law or threshold (analyze)"},
        {"--workers", "workers", "worker threads, 0 = hardware concurrency"},
    };
    std::string command;
    for (const auto &name : kCommands) {
        CLI::App *sub = app.add_subcommand(name, kCommandHelp.at(name));
        sub->callback([&command, name] { command = name; });
        sub->add_option("--config", config_path, "TOML-style config file");
        for (const Flag &f : flags) {
            std::string key = f.key;
            std::string flag = f.name;
            sub->add_option_function<std::string>(
                flag, [&raw, key](const std::string &v) { raw[key] = v; }, f.help);
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        auto subs = app.get_subcommands();
        throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            throw UsageError("config: cannot read '" + config_path + "'");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        KeyValues file_values = parse_config_text(buf.str());
        file_values.erase("command");
        apply_values(config, file_values);
    }
    apply_values(config, raw);
    config.command = command;
    validate(config);
    return config;
}

}  // namespace qecdist::cli
