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

#ifndef QECDIST_ERRORS_HPP
#define QECDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qecdist {

/// Invalid user-supplied configuration (bad lengths, out-of-range values, unknown keys).
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A gate whose generator does not square to identity; the closed-form propagator is invalid for it.
class UnsupportedGateError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition on simulator state was violated (e.g. resetting an entangled qubit).
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Measurement selected a branch with vanishing weight.
class NumericalCollapseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A metric relation that holds as a theorem failed numerically. Always a bug.
class MetricDefect : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace qecdist

#endif
