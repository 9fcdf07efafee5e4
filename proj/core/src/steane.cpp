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
#include "qecdist/steane.hpp"

#include <bit>
#include <sstream>

#include "qecdist/errors.hpp"

namespace qecdist {

SteaneCode::SteaneCode() : layout_(steane_layout()), ancillas_{7, 8, 9, 10} {
    for (uint64_t s : layout_.x_stabilizers) {
        stabilizers_.push_back(PauliString::x_on(s));
    }
    for (uint64_t s : layout_.z_stabilizers) {
        stabilizers_.push_back(PauliString::z_on(s));
    }
    for (const auto &s : stabilizers_) {
        circuits_.push_back(build_circuit(s));
    }
    // Invert the syndrome table column by column.
    z_repair_qubit_.fill(-1);
    x_repair_qubit_.fill(-1);
    for (std::size_t q = 0; q < layout_.n_data; q++) {
        uint64_t bit = uint64_t{1} << q;
        uint32_t z_col = layout_.x_syndrome_of_z(bit);
        uint32_t x_col = layout_.z_syndrome_of_x(bit);
        if (z_col == 0 || z_repair_qubit_[z_col] != -1 || x_col == 0 || x_repair_qubit_[x_col] != -1) {
            throw ContractViolation("Steane syndrome table columns are not unique");
        }
        z_repair_qubit_[z_col] = static_cast<int>(q);
        x_repair_qubit_[x_col] = static_cast<int>(q);
    }
}

SteaneCode::StabilizerCircuit SteaneCode::build_circuit(const PauliString &stabilizer) const {
    bool x_type = stabilizer.z_mask() == 0 && stabilizer.x_mask() != 0;
    bool z_type = stabilizer.x_mask() == 0 && stabilizer.z_mask() != 0;
    if ((!x_type && !z_type) || stabilizer.weight() != 4 || stabilizer.phase_exponent() != 0) {
        throw ConfigError("Steane measure_stabilizer: only +1-phase weight-4 X-type or Z-type stabilizers are supported");
    }
    if (stabilizer.max_qubit() >= static_cast<int>(layout_.n_data)) {
        throw ConfigError("Steane measure_stabilizer: stabilizer must act on data qubits only");
    }
    StabilizerCircuit c{stabilizer, {}};
    uint64_t support = x_type ? stabilizer.x_mask() : stabilizer.z_mask();
    std::size_t k = 0;
    for (uint64_t rest = support; rest != 0; rest &= rest - 1, k++) {
        auto q = static_cast<std::size_t>(std::countr_zero(rest));
        c.gates.push_back(x_type ? cnot(ancillas_[k], q) : cz(ancillas_[k], q));
    }
    for (std::size_t a : ancillas_) {
        c.gates.push_back(hadamard_w(a));
    }
    return c;
}

const SteaneCode::StabilizerCircuit &SteaneCode::circuit_for(const PauliString &stabilizer) const {
    for (const auto &c : circuits_) {
        if (c.stabilizer == stabilizer) {
            return c;
        }
    }
    thread_local StabilizerCircuit scratch;
    scratch = build_circuit(stabilizer);
    return scratch;
}

int SteaneCode::measure_stabilizer(
    StateVector &state,
    const PauliString &stabilizer,
    const NoiseModel &noise,
    RngStream &rng,
    std::span<const ScheduledFault> plan,
    std::size_t measurement_index) const {
    if (state.n_qubits() != layout_.n_total()) {
        throw ConfigError("Steane measure_stabilizer: register must have 11 qubits");
    }
    const StabilizerCircuit &circuit = circuit_for(stabilizer);
    apply_scheduled_faults(state, plan, measurement_index, 0);
    prepare_cat_state(state, ancillas_);
    for (std::size_t g = 0; g < circuit.gates.size(); g++) {
        apply_noisy_gate(state, circuit.gates[g], noise, rng);
        apply_scheduled_faults(state, plan, measurement_index, g + 1);
    }
    int parity = 0;
    for (std::size_t a : ancillas_) {
        parity ^= measure_qubit(state, a, rng.uniform());
        reset_qubit(state, a);
    }
    return parity;
}

uint32_t SteaneCode::measure_block(
    StateVector &state,
    std::size_t first_stabilizer,
    const NoiseModel &noise,
    RngStream &rng,
    std::span<const ScheduledFault> plan,
    std::size_t &measurement_counter,
    PauliString &injected) const {
    uint32_t syndrome = 0;
    for (std::size_t row = 0; row < 3; row++) {
        if (noise.injects_pauli_faults()) {
            injected = inject_pauli_faults(state, layout_.data_mask(), noise.strength, rng) * injected;
        }
        int bit = measure_stabilizer(state, stabilizers_[first_stabilizer + row], noise, rng, plan, measurement_counter);
        measurement_counter++;
        syndrome |= static_cast<uint32_t>(bit) << row;
    }
    return syndrome;
}

SteaneSyndromeRecord SteaneCode::qec_cycle(
    StateVector &state, const NoiseModel &noise, RngStream &rng, std::span<const ScheduledFault> plan) const {
    SteaneSyndromeRecord record;
    std::size_t counter = 0;
    auto detect = [&](std::size_t first, std::vector<uint32_t> &rounds, bool &capped, RepairType type) {
        rounds.push_back(measure_block(state, first, noise, rng, plan, counter, record.injected));
        rounds.push_back(measure_block(state, first, noise, rng, plan, counter, record.injected));
        while (rounds[rounds.size() - 1] != rounds[rounds.size() - 2] && rounds.size() < kMaxRounds) {
            rounds.push_back(measure_block(state, first, noise, rng, plan, counter, record.injected));
        }
        capped = rounds[rounds.size() - 1] != rounds[rounds.size() - 2];
        PauliString repair = repair_from_syndrome(rounds.back(), type);
        if (!repair.is_identity()) {
            apply_pauli(state, repair);
            record.corrections = repair * record.corrections;
        }
    };
    detect(0, record.z_detect_rounds, record.z_detect_capped, RepairType::Z);
    detect(3, record.x_detect_rounds, record.x_detect_capped, RepairType::X);
    record.measurements = counter;
    return record;
}

PauliString SteaneCode::repair_from_syndrome(uint32_t syndrome, RepairType type) const {
    if (syndrome >= 8) {
        throw ConfigError("Steane repair_from_syndrome: syndrome must be 3 bits");
    }
    if (syndrome == 0) {
        return {};
    }
    if (type == RepairType::Z) {
        return PauliString::single(static_cast<std::size_t>(z_repair_qubit_[syndrome]), Pauli::Z);
    }
    return PauliString::single(static_cast<std::size_t>(x_repair_qubit_[syndrome]), Pauli::X);
}

std::string SteaneCode::syndrome_table_csv() const {
    std::ostringstream out;
    for (std::size_t half = 0; half < 2; half++) {
        const char err = half == 0 ? 'Z' : 'X';
        out << "operator";
        for (std::size_t q = 0; q < layout_.n_data; q++) {
            out << ',' << err << q + 1;
        }
        out << '\n';
        for (std::size_t row = 0; row < 3; row++) {
            const PauliString &s = stabilizers_[3 * half + row];
            uint64_t support = half == 0 ? s.x_mask() : s.z_mask();
            std::string name;
            for (std::size_t q = 0; q < layout_.n_data; q++) {
                if ((support >> q) & 1) {
                    name += (half == 0 ? 'X' : 'Z') + std::to_string(q + 1);
                }
            }
            out << name;
            for (std::size_t q = 0; q < layout_.n_data; q++) {
                out << ',' << ((support >> q) & 1);
            }
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace qecdist
