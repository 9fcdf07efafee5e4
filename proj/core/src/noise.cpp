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
#include "qecdist/noise.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qecdist/errors.hpp"

namespace qecdist {

NoiseModel NoiseModel::pauli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("pauli noise: p must lie in [0, 1]");
    }
    return {NoiseKind::StochasticPauli, p};
}

NoiseModel NoiseModel::pulse_area(double sigma) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw ConfigError("pulse-area noise: sigma must be >= 0");
    }
    return {NoiseKind::PulseArea, sigma};
}

std::string NoiseModel::str() const {
    std::ostringstream out;
    out << noise_kind_name(kind);
    if (kind == NoiseKind::StochasticPauli) {
        out << "(p=" << strength << ")";
    } else if (kind == NoiseKind::PulseArea) {
        out << "(sigma=" << strength << ")";
    }
    return out.str();
}

std::string noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::None: return "none";
        case NoiseKind::StochasticPauli: return "pauli";
        case NoiseKind::PulseArea: return "pulse-area";
    }
    return "none";
}

NoiseKind parse_noise_kind(const std::string &name) {
    if (name == "none") {
        return NoiseKind::None;
    }
    if (name == "pauli") {
        return NoiseKind::StochasticPauli;
    }
    if (name == "pulse-area" || name == "pulse_area") {
        return NoiseKind::PulseArea;
    }
    throw ConfigError("noise: unknown model '" + name + "' (expected none, pauli, pulse-area)");
}

double sample_pulse_scale(double sigma, RngStream &rng) {
    double r = rng.uniform_open_symmetric();
    return 1.0 + sigma * r;
}

void apply_noisy_gate(StateVector &state, const GateSpec &gate, const NoiseModel &noise, RngStream &rng) {
    double angle = gate.nominal_angle;
    if (noise.kind == NoiseKind::PulseArea) {
        angle *= sample_pulse_scale(noise.strength, rng);
    }
    apply_generated_unitary(state, gate, angle);
}

PauliString inject_pauli_faults(StateVector &state, uint64_t qubits, double p, RngStream &rng) {
    uint64_t xs = 0;
    uint64_t zs = 0;
    for (uint64_t rest = qubits; rest != 0; rest &= rest - 1) {
        uint64_t bit = rest & (~rest + 1);
        if (rng.uniform() < p) {
            xs |= bit;
        }
        if (rng.uniform() < p) {
            zs |= bit;
        }
    }
    // Z^z X^x = (-1)^{|x&z|} X^x Z^z; PauliString's (x, z, k) means i^k * letters = i^{k+ny} X^x Z^z.
    int ny = std::popcount(xs & zs);
    PauliString applied(xs, zs, ny);
    if (!applied.is_identity()) {
        apply_pauli(state, applied);
    }
    return applied;
}

std::pair<double, double> random_input_angles(RngStream &rng) {
    double theta = std::numbers::pi * rng.uniform();
    double phi = 2.0 * std::numbers::pi * rng.uniform();
    return {theta, phi};
}

}  // namespace qecdist
