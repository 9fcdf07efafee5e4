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
#include "qecdist/surface17.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

constexpr double kFidelityTolerance = 1e-10;

/// Minimal-weight support with the requested syndrome; among equal weights the sorted qubit
/// list that compares lowest wins.
template <typename SyndromeFn>
uint64_t min_weight_support(uint32_t target, std::size_t n, SyndromeFn syndrome_of) {
    for (std::size_t w = 0; w <= n; w++) {
        // Enumerate w-subsets in lexicographic order of their sorted index lists.
        std::vector<std::size_t> idx(w);
        for (std::size_t i = 0; i < w; i++) {
            idx[i] = i;
        }
        while (true) {
            uint64_t m = 0;
            for (std::size_t i : idx) {
                m |= uint64_t{1} << i;
            }
            if (syndrome_of(m) == target) {
                return m;
            }
            std::size_t i = w;
            while (i > 0 && idx[i - 1] == n - w + (i - 1)) {
                i--;
            }
            if (i == 0) {
                break;
            }
            idx[i - 1]++;
            for (std::size_t j = i; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    throw ContractViolation("surface-17 lookup: syndrome is unreachable");
}

struct Tables {
    std::array<uint64_t, 16> z_correction;
    std::array<uint64_t, 16> x_correction;
};

const Tables &tables() {
    static const Tables t = [] {
        const CodeLayout &c = surface17_layout();
        Tables r{};
        for (uint32_t s = 0; s < 16; s++) {
            r.z_correction[s] = min_weight_support(s, c.n_data, [&](uint64_t m) { return c.x_syndrome_of_z(m); });
            r.x_correction[s] = min_weight_support(s, c.n_data, [&](uint64_t m) { return c.z_syndrome_of_x(m); });
        }
        return r;
    }();
    return t;
}

std::string support_name(char letter, uint64_t m) {
    if (m == 0) {
        return "I";
    }
    std::string out;
    for (std::size_t q = 0; q < 64; q++) {
        if ((m >> q) & 1) {
            out += letter + std::to_string(q);
        }
    }
    return out;
}

}  // namespace

Surface17Schedule Surface17Schedule::standard() {
    Surface17Schedule s;
    s.x_order = {std::vector<std::size_t>{0, 1, 3, 4}, {1, 2}, {6, 7}, {4, 5, 7, 8}};
    s.z_order = {std::vector<std::size_t>{0, 3}, {1, 4, 2, 5}, {3, 6, 4, 7}, {5, 8}};
    return s;
}

Surface17Code::Surface17Code(Surface17Schedule schedule) : layout_(surface17_layout()), schedule_(std::move(schedule)) {
    auto check = [](const std::vector<std::size_t> &order, uint64_t support) {
        uint64_t m = 0;
        for (std::size_t q : order) {
            m |= uint64_t{1} << q;
        }
        if (m != support || order.size() != static_cast<std::size_t>(std::popcount(support))) {
            throw ConfigError("surface-17 schedule does not match the stabilizer supports");
        }
    };
    for (std::size_t i = 0; i < 4; i++) {
        check(schedule_.x_order[i], layout_.x_stabilizers[i]);
        StabilizerCircuit c{true, {hadamard_w(kAncilla)}};
        for (std::size_t q : schedule_.x_order[i]) {
            c.gates.push_back(cnot(kAncilla, q));
        }
        c.gates.push_back(hadamard_w(kAncilla));
        circuits_.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < 4; i++) {
        check(schedule_.z_order[i], layout_.z_stabilizers[i]);
        StabilizerCircuit c{false, {hadamard_w(kAncilla)}};
        for (std::size_t q : schedule_.z_order[i]) {
            c.gates.push_back(cz(kAncilla, q));
        }
        c.gates.push_back(hadamard_w(kAncilla));
        circuits_.push_back(std::move(c));
    }
}

std::string Surface17Code::stabilizer_name(std::size_t stabilizer) const {
    if (stabilizer < 4) {
        return support_name('X', layout_.x_stabilizers[stabilizer]);
    }
    return support_name('Z', layout_.z_stabilizers[stabilizer - 4]);
}

RoundSyndrome Surface17Code::stabilizer_round(
    StateVector &state,
    const NoiseModel &noise,
    RngStream &rng,
    std::span<const ScheduledFault> plan,
    std::size_t round,
    PauliString *injected) const {
    if (state.n_qubits() != layout_.n_total()) {
        throw ConfigError("surface-17 stabilizer_round: register must have 10 qubits");
    }
    RoundSyndrome out;
    for (std::size_t s = 0; s < circuits_.size(); s++) {
        const std::size_t m = round * circuits_.size() + s;
        if (noise.injects_pauli_faults()) {
            PauliString f = inject_pauli_faults(state, layout_.data_mask(), noise.strength, rng);
            if (injected != nullptr) {
                *injected = f * *injected;
            }
        }
        apply_scheduled_faults(state, plan, m, 0);
        const auto &gates = circuits_[s].gates;
        for (std::size_t g = 0; g < gates.size(); g++) {
            apply_noisy_gate(state, gates[g], noise, rng);
            apply_scheduled_faults(state, plan, m, g + 1);
        }
        int bit = measure_qubit(state, kAncilla, rng.uniform());
        reset_qubit(state, kAncilla);
        if (s < 4) {
            out.x_bits |= static_cast<uint32_t>(bit) << s;
        } else {
            out.z_bits |= static_cast<uint32_t>(bit) << (s - 4);
        }
    }
    return out;
}

SingleShotResult Surface17Code::single_shot_cycle(
    StateVector &state, const NoiseModel &noise, RngStream &rng, std::span<const ScheduledFault> plan) const {
    SingleShotResult result;
    for (std::size_t r = 0; r < kRounds; r++) {
        result.rounds[r] = stabilizer_round(state, noise, rng, plan, r, &result.injected);
    }
    auto majority = [](uint32_t a, uint32_t b, uint32_t c) { return (a & b) | (a & c) | (b & c); };
    const auto &rs = result.rounds;
    result.consensus.x_bits = majority(rs[0].x_bits, rs[1].x_bits, rs[2].x_bits);
    result.consensus.z_bits = majority(rs[0].z_bits, rs[1].z_bits, rs[2].z_bits);
    result.corrections = lookup_decode(result.consensus);
    if (!result.corrections.is_identity()) {
        apply_pauli(state, result.corrections);
    }
    return result;
}

uint64_t Surface17Code::z_correction_for(uint32_t x_bits) {
    if (x_bits >= 16) {
        throw ConfigError("surface-17 lookup: syndrome must be 4 bits");
    }
    return tables().z_correction[x_bits];
}

uint64_t Surface17Code::x_correction_for(uint32_t z_bits) {
    if (z_bits >= 16) {
        throw ConfigError("surface-17 lookup: syndrome must be 4 bits");
    }
    return tables().x_correction[z_bits];
}

PauliString Surface17Code::lookup_decode(const RoundSyndrome &consensus) {
    uint64_t z = z_correction_for(consensus.x_bits);
    uint64_t x = x_correction_for(consensus.z_bits);
    // Product of the X correction and the Z correction; the phase is irrelevant for repair.
    return PauliString(x, z, std::popcount(x & z));
}

std::string Surface17Code::lookup_tables_csv() {
    std::ostringstream out;
    out << "table,syndrome,correction\n";
    for (uint32_t s = 0; s < 16; s++) {
        out << "x_stabilizers," << (s & 1) << ((s >> 1) & 1) << ((s >> 2) & 1) << ((s >> 3) & 1) << ','
            << support_name('Z', z_correction_for(s)) << '\n';
    }
    for (uint32_t s = 0; s < 16; s++) {
        out << "z_stabilizers," << (s & 1) << ((s >> 1) & 1) << ((s >> 2) & 1) << ((s >> 3) & 1) << ','
            << support_name('X', x_correction_for(s)) << '\n';
    }
    return out.str();
}

FaultToleranceReport Surface17Code::verify_fault_tolerance() const {
    std::vector<FaultPlan> plans;
    const char letters[3] = {'X', 'Y', 'Z'};
    const Pauli paulis[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t r = 0; r < kRounds; r++) {
        for (std::size_t s = 0; s < circuits_.size(); s++) {
            for (std::size_t step = 0; step <= circuits_[s].gates.size(); step++) {
                for (std::size_t k = 0; k < 3; k++) {
                    (void)letters;
                    plans.push_back({ScheduledFault{r * circuits_.size() + s, step, PauliString::single(kAncilla, paulis[k])}});
                }
            }
        }
    }
    return verify_fault_tolerance(plans);
}

FaultToleranceReport Surface17Code::verify_fault_tolerance(std::span<const FaultPlan> plans) const {
    FaultToleranceReport report;
    const double theta = 1.1;
    const double phi = 0.7;
    const Complex alpha(std::cos(theta), 0.0);
    const Complex beta = std::sin(theta) * std::polar(1.0, phi);
    const StateVector ideal = layout_.encoded_data_state(alpha, beta);
    RngStream rng(0, 0);
    for (const FaultPlan &plan : plans) {
        StateVector state = encode(alpha, beta);
        single_shot_cycle(state, NoiseModel::none(), rng, plan);
        single_shot_cycle(state, NoiseModel::none(), rng);
        StateVector data = data_factor(state, layout_);
        double f2 = std::norm(inner_product(ideal, data));
        report.faults_checked++;
        if (f2 < 1.0 - kFidelityTolerance) {
            for (const auto &f : plan) {
                std::size_t round = f.measurement / circuits_.size();
                std::size_t stab = f.measurement % circuits_.size();
                char letter = "IXZY"[static_cast<int>(f.pauli.at(kAncilla))];
                report.violations.push_back({round, stabilizer_name(stab), f.step, letter, f2});
            }
            if (plan.empty()) {
                report.violations.push_back({0, "none", 0, 'I', f2});
            }
        }
    }
    return report;
}

std::string FaultToleranceReport::str() const {
    std::ostringstream out;
    out << "checked " << faults_checked << " single ancilla faults, " << violations.size() << " violation(s)\n";
    for (const auto &v : violations) {
        out << "  round " << v.round << " " << v.stabilizer << " step " << v.step << " " << v.pauli
            << " -> F^2 = " << v.fidelity_sq << '\n';
    }
    return out.str();
}

}  // namespace qecdist
