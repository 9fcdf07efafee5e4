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
#ifndef QECDIST_SURFACE17_HPP
#define QECDIST_SURFACE17_HPP

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

/// Coupling order of every stabilizer, listed as data qubits in the order the ancilla touches them.
struct Surface17Schedule {
    std::array<std::vector<std::size_t>, 4> x_order;
    std::array<std::vector<std::size_t>, 4> z_order;

    /// Weight-4 X checks row by row (Z shape), weight-4 Z checks column by column (mirrored S),
    /// weight-2 checks ascending.
    static Surface17Schedule standard();
};

/// One round: 4 X-stabilizer bits then 4 Z-stabilizer bits, bit i = stabilizer i in layout order.
struct RoundSyndrome {
    uint32_t x_bits = 0;
    uint32_t z_bits = 0;
    bool operator==(const RoundSyndrome &) const = default;
};

struct SingleShotResult {
    std::array<RoundSyndrome, 3> rounds;
    RoundSyndrome consensus;
    PauliString corrections;
    PauliString injected;
};

struct FaultToleranceViolation {
    std::size_t round;
    std::string stabilizer;
    std::size_t step;
    char pauli;
    double fidelity_sq;
};

struct FaultToleranceReport {
    std::size_t faults_checked = 0;
    std::vector<FaultToleranceViolation> violations;
    bool passed() const { return violations.empty(); }
    std::string str() const;
};

/// Tilted 17-qubit surface code (distance 3) with three stabilizer rounds and one decode per cycle.
///
/// Register: data qubits 0..8 on a row-major 3x3 grid, ancilla 9 reused by every measurement.
class Surface17Code {
   public:
    static constexpr std::size_t kRounds = 3;
    static constexpr std::size_t kAncilla = 9;

    explicit Surface17Code(Surface17Schedule schedule = Surface17Schedule::standard());

    const CodeLayout &layout() const { return layout_; }
    const Surface17Schedule &schedule() const { return schedule_; }
    StateVector encode(Complex alpha, Complex beta) const { return layout_.encode(alpha, beta); }

    /// Four X-stabilizer measurements then four Z-stabilizer measurements. Each is W on the
    /// ancilla, the scheduled couplings (CNOT for X checks, CZ for Z checks), W, measure, reset.
    /// `round` only offsets the measurement index used to match `plan`.
    RoundSyndrome stabilizer_round(
        StateVector &state,
        const NoiseModel &noise,
        RngStream &rng,
        std::span<const ScheduledFault> plan = {},
        std::size_t round = 0,
        PauliString *injected = nullptr) const;

    /// Three rounds, per-bit majority vote, one lookup decode, noiseless correction.
    SingleShotResult single_shot_cycle(
        StateVector &state, const NoiseModel &noise, RngStream &rng, std::span<const ScheduledFault> plan = {}) const;

    /// X-stabilizer bits select a Z correction; Z-stabilizer bits select an X correction.
    static PauliString lookup_decode(const RoundSyndrome &consensus);
    /// Minimal-weight data support for one 4-bit syndrome of the given table (ties go to the
    /// lexicographically smallest qubit list).
    static uint64_t z_correction_for(uint32_t x_bits);
    static uint64_t x_correction_for(uint32_t z_bits);

    /// Injects every single X, Y, Z on the ancilla at every step of every measurement of the
    /// cycle, runs the noiseless cycle plus a noiseless follow-up cycle, and reports outputs
    /// whose fidelity with the input is below 1 - 1e-10.
    FaultToleranceReport verify_fault_tolerance() const;
    /// Same check for an explicit list of fault plans (each run separately).
    FaultToleranceReport verify_fault_tolerance(std::span<const FaultPlan> plans) const;

    /// Both lookup tables as CSV: table,syndrome,correction.
    static std::string lookup_tables_csv();

    /// Number of noisy gates in measurement `stabilizer` (0..7).
    std::size_t gates_in_measurement(std::size_t stabilizer) const { return circuits_[stabilizer].gates.size(); }
    std::string stabilizer_name(std::size_t stabilizer) const;

   private:
    struct StabilizerCircuit {
        bool x_type;
        std::vector<GateSpec> gates;
    };

    CodeLayout layout_;
    Surface17Schedule schedule_;
    std::vector<StabilizerCircuit> circuits_;
};

}  // namespace qecdist

#endif
