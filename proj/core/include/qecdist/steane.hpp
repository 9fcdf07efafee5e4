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
#ifndef QECDIST_STEANE_HPP
#define QECDIST_STEANE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qecdist/code_layout.hpp"
#include "qecdist/fault_plan.hpp"
#include "qecdist/gates.hpp"
#include "qecdist/noise.hpp"
#include "qecdist/rng.hpp"

namespace qecdist {

enum class RepairType { X, Z };

/// Syndrome history of one Steane cycle. Syndromes are 3-bit values, bit i = table row i.
struct SteaneSyndromeRecord {
    /// Rounds of the three X-type stabilizers (they flag Z errors).
    std::vector<uint32_t> z_detect_rounds;
    /// Rounds of the three Z-type stabilizers (they flag X errors).
    std::vector<uint32_t> x_detect_rounds;
    bool z_detect_capped = false;
    bool x_detect_capped = false;
    PauliString corrections;
    /// Stochastic faults realized during the cycle, in order of injection.
    PauliString injected;
    std::size_t measurements = 0;
};

/// Steane [[7,1,3]] memory cycle with Shor cat-state syndrome extraction.
///
/// Register layout: data qubits 0..6 (labels 1..7 of the syndrome table), cat ancillas 7..10.
class SteaneCode {
   public:
    static constexpr std::size_t kMaxRounds = 10;
    static constexpr std::size_t kGatesPerMeasurement = 8;

    SteaneCode();

    const CodeLayout &layout() const { return layout_; }
    StateVector encode(Complex alpha, Complex beta) const { return layout_.encode(alpha, beta); }

    /// Stabilizers in measurement order: the three X-type, then the three Z-type.
    std::span<const PauliString> stabilizers() const { return stabilizers_; }

    /// Measures one weight-4 X- or Z-type stabilizer with an ideal 4-qubit cat state. Coupling
    /// gates and readout rotations go through apply_noisy_gate. Returns the parity of the four
    /// cat-qubit outcomes; ancillas are left in |0>.
    int measure_stabilizer(
        StateVector &state,
        const PauliString &stabilizer,
        const NoiseModel &noise,
        RngStream &rng,
        std::span<const ScheduledFault> plan = {},
        std::size_t measurement_index = 0) const;

    /// One full cycle: Z-error detection (loop until two consecutive rounds agree, at most
    /// kMaxRounds), Z repair, then the same for X errors.
    SteaneSyndromeRecord qec_cycle(
        StateVector &state, const NoiseModel &noise, RngStream &rng, std::span<const ScheduledFault> plan = {}) const;

    /// Table lookup: 0 gives the identity, otherwise the single-qubit repair on the unique
    /// qubit whose column matches.
    PauliString repair_from_syndrome(uint32_t syndrome, RepairType type) const;

    /// Syndrome table as CSV: one row per stabilizer, one column per data qubit label.
    std::string syndrome_table_csv() const;

   private:
    struct StabilizerCircuit {
        PauliString stabilizer;
        std::vector<GateSpec> gates;  // couplings, then readout rotations
    };

    const StabilizerCircuit &circuit_for(const PauliString &stabilizer) const;
    StabilizerCircuit build_circuit(const PauliString &stabilizer) const;
    uint32_t measure_block(
        StateVector &state,
        std::size_t first_stabilizer,
        const NoiseModel &noise,
        RngStream &rng,
        std::span<const ScheduledFault> plan,
        std::size_t &measurement_counter,
        PauliString &injected) const;

    CodeLayout layout_;
    std::vector<PauliString> stabilizers_;
    std::vector<StabilizerCircuit> circuits_;
    std::array<std::size_t, 4> ancillas_;
    std::array<int, 8> z_repair_qubit_;
    std::array<int, 8> x_repair_qubit_;
};

}  // namespace qecdist

#endif
