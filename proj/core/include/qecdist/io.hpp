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
#ifndef QECDIST_IO_HPP
#define QECDIST_IO_HPP

#include <string>

#include "qecdist/harness.hpp"

namespace qecdist {

inline constexpr int kSchemaVersion = 1;

/// One JSON object on a single line (no trailing newline).
std::string trial_record_json(const TrialRecord &record);

/// Full summary with schema_version, the experiment config and every histogram.
/// `run_config_json`, when non-empty, must be a JSON object and is embedded as "run_config".
std::string sweep_summary_json(const SweepSummary &summary, const std::string &run_config_json = {});

/// Inverse of sweep_summary_json (the run_config block is ignored). Throws ConfigError on
/// malformed input or an unsupported schema version.
SweepSummary parse_sweep_summary(const std::string &text);

/// The "run_config" object of a stored summary, serialized, or an empty string.
std::string embedded_run_config(const std::string &summary_text);

/// One CSV per sweep point: parameter,bin_low,bin_high,<metric>...
std::string sweep_histograms_csv(const SweepSummary &summary);

}  // namespace qecdist

#endif
