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
#ifndef QECDIST_FAULT_PLAN_HPP
#define QECDIST_FAULT_PLAN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qecdist/statevector.hpp"

namespace qecdist {

/// A Pauli forced into a cycle at a fixed place.
///
/// `measurement` counts stabilizer measurements from 0 within one cycle. `step` 0 is
/// immediately before that measurement begins (the stochastic fault location); step k > 0
/// is right after the k-th noisy gate of that measurement's circuit.
struct ScheduledFault {
    std::size_t measurement;
    std::size_t step;
    PauliString pauli;
};

using FaultPlan = std::vector<ScheduledFault>;

inline void apply_scheduled_faults(
    StateVector &state, std::span<const ScheduledFault> plan, std::size_t measurement, std::size_t step) {
    for (const auto &f : plan) {
        if (f.measurement == measurement && f.step == step) {
            apply_pauli(state, f.pauli);
        }
    }
}

}  // namespace qecdist

#endif
