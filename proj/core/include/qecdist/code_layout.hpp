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
#ifndef QECDIST_CODE_LAYOUT_HPP
#define QECDIST_CODE_LAYOUT_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qecdist/statevector.hpp"

namespace qecdist {

enum class CodeId { Steane, Surface17 };

std::string code_name(CodeId id);
CodeId parse_code_id(const std::string &name);

/// Static description of a CSS memory code: data/ancilla register split, stabilizer supports,
/// logical representatives, and the single-qubit error indices that are dropped when building
/// correctable-error subspaces because they duplicate another index on the codespace.
struct CodeLayout {
    CodeId id;
    std::size_t n_data;
    std::size_t n_ancilla;
    /// Supports of the X-type stabilizers (they detect Z errors), as data-qubit masks.
    std::vector<uint64_t> x_stabilizers;
    /// Supports of the Z-type stabilizers (they detect X errors).
    std::vector<uint64_t> z_stabilizers;
    uint64_t logical_x;
    uint64_t logical_z;
    uint64_t excluded_x_errors = 0;
    uint64_t excluded_z_errors = 0;

    std::size_t n_total() const { return n_data + n_ancilla; }
    uint64_t data_mask() const { return (uint64_t{1} << n_data) - 1; }
    uint64_t ancilla_mask() const { return ((uint64_t{1} << n_total()) - 1) & ~data_mask(); }

    /// Bits of the Z-type stabilizers flipped by X errors on `x_support` (bit i = stabilizer i).
    uint32_t z_syndrome_of_x(uint64_t x_support) const;
    /// Bits of the X-type stabilizers flipped by Z errors on `z_support`.
    uint32_t x_syndrome_of_z(uint64_t z_support) const;
    /// (X-stabilizer syndrome, Z-stabilizer syndrome) of a data Pauli; identifies its sector.
    std::pair<uint32_t, uint32_t> sector(const PauliString &p) const;

    /// |0_L> and |1_L> on the data qubits only.
    std::pair<StateVector, StateVector> logical_basis() const;
    /// alpha|0_L> + beta|1_L> on the data qubits only.
    StateVector encoded_data_state(Complex alpha, Complex beta) const;
    /// alpha|0_L> + beta|1_L> tensored with |0...0> on the ancillas. Throws ConfigError if unnormalized.
    StateVector encode(Complex alpha, Complex beta) const;
};

const CodeLayout &steane_layout();
const CodeLayout &surface17_layout();
const CodeLayout &layout_for(CodeId id);

/// Copies the data-qubit block out of a full register whose ancillas are all |0>.
/// Throws ContractViolation if any ancilla carries weight above the entanglement tolerance.
StateVector data_factor(const StateVector &full, const CodeLayout &layout);

}  // namespace qecdist

#endif
