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
#include "qecdist/code_layout.hpp"

#include <bit>
#include <cmath>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

uint64_t mask_of(std::initializer_list<int> qubits) {
    uint64_t m = 0;
    for (int q : qubits) {
        m |= uint64_t{1} << q;
    }
    return m;
}

CodeLayout make_steane() {
    // Labels 1..7 of the usual Hamming layout map to qubits 0..6; rows in the order of the syndrome table.
    CodeLayout c{};
    c.id = CodeId::Steane;
    c.n_data = 7;
    c.n_ancilla = 4;
    c.x_stabilizers = {mask_of({1, 3, 4, 6}), mask_of({2, 3, 4, 5}), mask_of({0, 3, 5, 6})};
    c.z_stabilizers = {mask_of({1, 2, 5, 6}), mask_of({0, 2, 4, 6}), mask_of({0, 1, 2, 3})};
    c.logical_x = mask_of({0, 1, 2, 3, 4, 5, 6});
    c.logical_z = mask_of({0, 1, 2, 3, 4, 5, 6});
    return c;
}

CodeLayout make_surface17() {
    // 3x3 data grid, row-major. Qubit 9 is the single reusable measurement ancilla.
    CodeLayout c{};
    c.id = CodeId::Surface17;
    c.n_data = 9;
    c.n_ancilla = 1;
    c.x_stabilizers = {mask_of({0, 1, 3, 4}), mask_of({1, 2}), mask_of({6, 7}), mask_of({4, 5, 7, 8})};
    c.z_stabilizers = {mask_of({0, 3}), mask_of({1, 2, 4, 5}), mask_of({3, 4, 6, 7}), mask_of({5, 8})};
    c.logical_x = mask_of({0, 1, 2, 3, 4, 5, 6, 7, 8});
    c.logical_z = mask_of({0, 1, 2, 3, 4, 5, 6, 7, 8});
    // X2 = X1 and X7 = X6, Z3 = Z0 and Z8 = Z5 on the codespace.
    c.excluded_x_errors = mask_of({2, 7});
    c.excluded_z_errors = mask_of({3, 8});
    return c;
}

}  // namespace

std::string code_name(CodeId id) {
    return id == CodeId::Steane ? "steane" : "surface17";
}

CodeId parse_code_id(const std::string &name) {
    if (name == "steane") {
        return CodeId::Steane;
    }
    if (name == "surface17" || name == "surface-17") {
        return CodeId::Surface17;
    }
    throw ConfigError("code: unknown code '" + name + "' (expected steane or surface17)");
}

uint32_t CodeLayout::z_syndrome_of_x(uint64_t x_support) const {
    uint32_t s = 0;
    for (std::size_t i = 0; i < z_stabilizers.size(); i++) {
        s |= static_cast<uint32_t>(std::popcount(z_stabilizers[i] & x_support) & 1) << i;
    }
    return s;
}

uint32_t CodeLayout::x_syndrome_of_z(uint64_t z_support) const {
    uint32_t s = 0;
    for (std::size_t i = 0; i < x_stabilizers.size(); i++) {
        s |= static_cast<uint32_t>(std::popcount(x_stabilizers[i] & z_support) & 1) << i;
    }
    return s;
}

std::pair<uint32_t, uint32_t> CodeLayout::sector(const PauliString &p) const {
    return {x_syndrome_of_z(p.z_mask()), z_syndrome_of_x(p.x_mask())};
}

std::pair<StateVector, StateVector> CodeLayout::logical_basis() const {
    // |0_L> is the uniform superposition over the span of the X-stabilizer supports.
    std::vector<uint64_t> words = {0};
    for (uint64_t g : x_stabilizers) {
        std::size_t n = words.size();
        for (std::size_t k = 0; k < n; k++) {
            words.push_back(words[k] ^ g);
        }
    }
    StateVector zero(n_data);
    StateVector one(n_data);
    zero[0] = 0.0;
    one[0] = 0.0;
    const double amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
    for (uint64_t w : words) {
        zero[w] = amp;
        one[w ^ logical_x] = amp;
    }
    return {std::move(zero), std::move(one)};
}

StateVector CodeLayout::encoded_data_state(Complex alpha, Complex beta) const {
    auto [zero, one] = logical_basis();
    StateVector out(n_data);
    for (std::size_t i = 0; i < out.dimension(); i++) {
        out[i] = alpha * zero[i] + beta * one[i];
    }
    return out;
}

StateVector CodeLayout::encode(Complex alpha, Complex beta) const {
    double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw ConfigError("encode: |alpha|^2 + |beta|^2 must equal 1");
    }
    StateVector data = encoded_data_state(alpha, beta);
    StateVector full(n_total());
    full[0] = 0.0;
    for (std::size_t i = 0; i < data.dimension(); i++) {
        full[i] = data[i];
    }
    return full;
}

const CodeLayout &steane_layout() {
    static const CodeLayout layout = make_steane();
    return layout;
}

const CodeLayout &surface17_layout() {
    static const CodeLayout layout = make_surface17();
    return layout;
}

const CodeLayout &layout_for(CodeId id) {
    return id == CodeId::Steane ? steane_layout() : surface17_layout();
}

StateVector data_factor(const StateVector &full, const CodeLayout &layout) {
    if (full.n_qubits() != layout.n_total()) {
        throw ConfigError("data_factor: register size does not match the code");
    }
    const std::size_t data_dim = std::size_t{1} << layout.n_data;
    for (std::size_t i = data_dim; i < full.dimension(); i++) {
        if (std::norm(full[i]) > kEntanglementTolerance * kEntanglementTolerance) {
            throw ContractViolation("data_factor: ancillas are not in |0>");
        }
    }
    std::vector<Complex> amps(full.amplitudes().begin(), full.amplitudes().begin() + static_cast<std::ptrdiff_t>(data_dim));
    return StateVector(layout.n_data, std::move(amps));
}

}  // namespace qecdist
