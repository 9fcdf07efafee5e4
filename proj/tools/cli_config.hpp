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
#ifndef QECDIST_TOOLS_CLI_CONFIG_HPP
#define QECDIST_TOOLS_CLI_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecdist/harness.hpp"

namespace qecdist::cli {

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// --help was given; what() is the help text.
class HelpRequested : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command = "sweep";
    CodeId code = CodeId::Steane;
    NoiseKind noise = NoiseKind::None;
    /// p values (pauli) or sigma values (pulse-area); ignored for noise none.
    std::vector<double> grid = {0.0};
    uint64_t trials = 100000;
    std::size_t cycles = 10;
    uint64_t seed = 1;
    uint64_t index = 0;
    MetricId criterion = MetricId::PFailPsi1;
    double threshold = 1e-6;
    InputKind input = InputKind::Random;
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};
    std::string output;
    std::string records;
    std::string summary;
    std::string fit = "all";
    std::size_t workers = 0;

    bool operator==(const RunConfig &) const = default;

    ExperimentConfig experiment() const;
    NoiseModel noise_at(double strength) const;
};

/// Flat key -> value view of a config file or command line. Section names prefix keys
/// ("noise.grid").
using KeyValues = std::map<std::string, std::string>;

/// Parses TOML-style text: `key = value` lines, `[noise]` / `[sweep]` sections, `#` comments.
/// Values may be bare, double-quoted, or bracketed lists.
KeyValues parse_config_text(const std::string &text);

/// Applies key/values over a config. Throws UsageError naming the key on unknown keys or bad
/// values.
void apply_values(RunConfig &config, const KeyValues &values);

/// Checks cross-field constraints; throws UsageError naming the field.
void validate(const RunConfig &config);

/// Serializes every field in the file format so parse_config_text + apply_values reproduce it.
std::string dump_config(const RunConfig &config);
/// The same fields as a JSON object (embedded in artifacts).
std::string config_json(const RunConfig &config);

/// Full command-line parse: subcommand, optional --config file, then flags override the file.
RunConfig parse_command_line(int argc, const char *const *argv);

}  // namespace qecdist::cli

#endif
