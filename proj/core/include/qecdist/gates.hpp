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
#ifndef QECDIST_GATES_HPP
#define QECDIST_GATES_HPP

#include <array>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <variant>

#include "qecdist/statevector.hpp"

namespace qecdist {

inline constexpr double kHalfPi = std::numbers::pi / 2;

/// Generator u_x X + u_y Y + u_z Z on one qubit, |u| = 1.
struct SingleAxis {
    std::size_t qubit;
    std::array<double, 3> axis;
};

/// Generator 1 - P + P (x) T, where P projects every control onto |1> and T is X or Z on the target.
struct ControlledPauli {
    uint64_t controls;
    std::size_t target;
    Pauli target_pauli;
};

/// A Hamiltonian-generated gate. Every generator squares to identity, so
/// exp(-i angle G) = cos(angle) 1 - i sin(angle) G exactly.
struct GateSpec {
    std::variant<SingleAxis, ControlledPauli> kind;
    double nominal_angle = kHalfPi;
    std::string label;

    /// Bit mask of every qubit the gate touches.
    uint64_t support() const;
};

/// Single-qubit rotation about a unit axis. Throws UnsupportedGateError if |axis| != 1 (1e-12).
GateSpec axis_rotation(std::size_t q, std::array<double, 3> axis, std::string label = {});
/// W = (X - Z)/sqrt(2); at the nominal angle the propagator is -i W.
GateSpec hadamard_w(std::size_t q);
/// At the nominal angle the propagator is -i CNOT; no relative phase between control branches.
GateSpec cnot(std::size_t control, std::size_t target);
/// At the nominal angle the propagator is -i CZ.
GateSpec cz(std::size_t control, std::size_t target);
/// Multi-controlled X or Z (Toffoli when two controls and X).
GateSpec controlled_pauli(std::span<const std::size_t> controls, std::size_t target, Pauli target_pauli);

/// state <- (cos(angle) 1 - i sin(angle) G) state.
void apply_generated_unitary(StateVector &state, const GateSpec &gate, double angle);
inline void apply_ideal_gate(StateVector &state, const GateSpec &gate) {
    apply_generated_unitary(state, gate, gate.nominal_angle);
}

/// state <- G state. Only used to check generator algebra.
void apply_generator(StateVector &state, const GateSpec &gate);

/// Writes the ideal cat state (|0..0> + |1..1>)/sqrt(2) onto the listed ancillas by amplitude
/// injection. Throws ContractViolation unless every ancilla is in |0>.
void prepare_cat_state(StateVector &state, std::span<const std::size_t> ancillas);

}  // namespace qecdist

#endif
