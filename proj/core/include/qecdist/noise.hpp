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
#ifndef QECDIST_NOISE_HPP
#define QECDIST_NOISE_HPP

#include <span>
#include <string>
#include <utility>

#include "qecdist/gates.hpp"
#include "qecdist/rng.hpp"
#include "qecdist/statevector.hpp"

namespace qecdist {

enum class NoiseKind { None, StochasticPauli, PulseArea };

/// Noise model. `strength` is p (per Pauli type per fault location) for StochasticPauli
/// and the fractional jitter sigma for PulseArea.
struct NoiseModel {
    NoiseKind kind = NoiseKind::None;
    double strength = 0.0;

    static NoiseModel none() { return {}; }
    static NoiseModel pauli(double p);
    static NoiseModel pulse_area(double sigma);

    bool injects_pauli_faults() const { return kind == NoiseKind::StochasticPauli && strength > 0; }
    bool jitters_gates() const { return kind == NoiseKind::PulseArea && strength > 0; }
    std::string str() const;
    bool operator==(const NoiseModel &) const = default;
};

std::string noise_kind_name(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string &name);

/// 1 + sigma r with r uniform on (-1, 1). Consumes exactly one uniform draw.
double sample_pulse_scale(double sigma, RngStream &rng);

/// Applies a circuit gate. Under PulseArea its angle is scaled by one sample_pulse_scale draw;
/// otherwise the nominal angle is used and no randomness is consumed.
void apply_noisy_gate(StateVector &state, const GateSpec &gate, const NoiseModel &noise, RngStream &rng);

/// For each listed qubit, applies X with probability p, then Z with probability p.
/// Returns the realized operator (Z applied after X, so X then Z on one qubit gives Z*X = iY).
PauliString inject_pauli_faults(StateVector &state, uint64_t qubits, double p, RngStream &rng);

/// theta uniform on [0, pi), phi uniform on [0, 2 pi).
std::pair<double, double> random_input_angles(RngStream &rng);

}  // namespace qecdist

#endif
