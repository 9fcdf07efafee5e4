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
#include "qecdist/gates.hpp"

#include <cmath>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

void check_qubit(const StateVector &state, uint64_t support) {
    if (state.n_qubits() < 64 && (support >> state.n_qubits()) != 0) {
        throw ConfigError("gate touches a qubit outside the register");
    }
}

void apply_single_axis(StateVector &state, const SingleAxis &g, double c, double s) {
    const double ux = g.axis[0];
    const double uy = g.axis[1];
    const double uz = g.axis[2];
    const Complex m00(c, -s * uz);
    const Complex m01(-s * uy, -s * ux);
    const Complex m10(s * uy, -s * ux);
    const Complex m11(c, s * uz);
    auto amps = state.amplitudes();
    const std::size_t bit = std::size_t{1} << g.qubit;
    const std::size_t dim = amps.size();
    for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
        for (std::size_t i = hi; i < hi + bit; i++) {
            Complex a0 = amps[i];
            Complex a1 = amps[i + bit];
            amps[i] = m00 * a0 + m01 * a1;
            amps[i + bit] = m10 * a0 + m11 * a1;
        }
    }
}

void apply_controlled(StateVector &state, const ControlledPauli &g, double c, double s) {
    auto amps = state.amplitudes();
    const std::size_t tbit = std::size_t{1} << g.target;
    const uint64_t ctrl = g.controls;
    const Complex off(c, -s);  // exp(-i angle) on the control-off subspace, where G = 1.
    const std::size_t dim = amps.size();
    if (g.target_pauli == Pauli::Z) {
        const Complex on0(c, -s);
        const Complex on1(c, s);
        for (std::size_t i = 0; i < dim; i++) {
            const bool on = (i & ctrl) == ctrl;
            amps[i] *= on ? ((i & tbit) ? on1 : on0) : off;
        }
        return;
    }
    const Complex mis(0, -s);
    for (std::size_t hi = 0; hi < dim; hi += 2 * tbit) {
        for (std::size_t i = hi; i < hi + tbit; i++) {
            const std::size_t j = i + tbit;
            if ((i & ctrl) != ctrl) {
                amps[i] *= off;
                amps[j] *= off;
            } else {
                const Complex a0 = amps[i];
                const Complex a1 = amps[j];
                amps[i] = c * a0 + mis * a1;
                amps[j] = c * a1 + mis * a0;
            }
        }
    }
}

}  // namespace

uint64_t GateSpec::support() const {
    if (auto *g = std::get_if<SingleAxis>(&kind)) {
        return uint64_t{1} << g->qubit;
    }
    const auto &g = std::get<ControlledPauli>(kind);
    return g.controls | (uint64_t{1} << g.target);
}

GateSpec axis_rotation(std::size_t q, std::array<double, 3> axis, std::string label) {
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(n - 1.0) > 1e-12) {
        throw UnsupportedGateError("axis_rotation: axis is not a unit vector, generator would not square to identity");
    }
    if (q >= 64) {
        throw ConfigError("axis_rotation: qubit index out of range");
    }
    if (label.empty()) {
        label = "R(" + std::to_string(q) + ")";
    }
    return GateSpec{SingleAxis{q, axis}, kHalfPi, std::move(label)};
}

GateSpec hadamard_w(std::size_t q) {
    const double r = 1.0 / std::sqrt(2.0);
    return axis_rotation(q, {r, 0.0, -r}, "W(" + std::to_string(q) + ")");
}

GateSpec controlled_pauli(std::span<const std::size_t> controls, std::size_t target, Pauli target_pauli) {
    if (target_pauli != Pauli::X && target_pauli != Pauli::Z) {
        throw UnsupportedGateError("controlled_pauli: target Pauli must be X or Z");
    }
    if (controls.empty()) {
        throw ConfigError("controlled_pauli: needs at least one control");
    }
    uint64_t mask = 0;
    std::string label = target_pauli == Pauli::X ? "CX(" : "CZ(";
    for (std::size_t c : controls) {
        if (c >= 64 || target >= 64) {
            throw ConfigError("controlled_pauli: qubit index out of range");
        }
        if (c == target || (mask >> c) & 1) {
            throw ConfigError("controlled_pauli: control and target qubits must be distinct");
        }
        mask |= uint64_t{1} << c;
        label += std::to_string(c) + ",";
    }
    label.back() = '-';
    label += ">" + std::to_string(target) + ")";
    return GateSpec{ControlledPauli{mask, target, target_pauli}, kHalfPi, std::move(label)};
}

GateSpec cnot(std::size_t control, std::size_t target) {
    std::size_t c[1] = {control};
    return controlled_pauli(c, target, Pauli::X);
}

GateSpec cz(std::size_t control, std::size_t target) {
    std::size_t c[1] = {control};
    return controlled_pauli(c, target, Pauli::Z);
}

namespace {

void apply_cos_sin(StateVector &state, const GateSpec &gate, double c, double s) {
    check_qubit(state, gate.support());
    if (auto *g = std::get_if<SingleAxis>(&gate.kind)) {
        apply_single_axis(state, *g, c, s);
    } else {
        apply_controlled(state, std::get<ControlledPauli>(gate.kind), c, s);
    }
}

}  // namespace

void apply_generated_unitary(StateVector &state, const GateSpec &gate, double angle) {
    apply_cos_sin(state, gate, std::cos(angle), std::sin(angle));
}

void apply_generator(StateVector &state, const GateSpec &gate) {
    // cos = 0, sin = 1 gives exactly -i G.
    apply_cos_sin(state, gate, 0.0, 1.0);
    state.scale(Complex(0, 1));
}

void prepare_cat_state(StateVector &state, std::span<const std::size_t> ancillas) {
    uint64_t mask = 0;
    for (std::size_t q : ancillas) {
        if (q >= state.n_qubits()) {
            throw ConfigError("prepare_cat_state: ancilla index out of range");
        }
        mask |= uint64_t{1} << q;
    }
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) != 0 && std::norm(amps[i]) > kEntanglementTolerance * kEntanglementTolerance) {
            throw ContractViolation("prepare_cat_state: ancillas are not all in |0>");
        }
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == 0) {
            Complex a = amps[i] * r;
            amps[i] = a;
            amps[i | mask] = a;
        }
    }
}

}  // namespace qecdist
