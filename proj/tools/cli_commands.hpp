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
#ifndef QECDIST_TOOLS_CLI_COMMANDS_HPP
#define QECDIST_TOOLS_CLI_COMMANDS_HPP

#include <iosfwd>

#include "cli_config.hpp"

namespace qecdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Runs config.command, writing human output to `out` and artifacts to disk. Returns the exit
/// status; errors are reported on `err`.
int dispatch(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_command_line + dispatch with the exit-code mapping.
int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qecdist::cli

#endif
