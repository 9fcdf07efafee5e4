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
#include "qecdist/statevector.hpp"

#include <algorithm>
#include <cctype>
#include <bit>
#include <cmath>
#include <sstream>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int popcount(uint64_t v) {
    return std::popcount(v);
}

}  // namespace

PauliString::PauliString(uint64_t x_mask, uint64_t z_mask, int phase_exponent)
    : xs_(x_mask), zs_(z_mask), phase_(((phase_exponent % 4) + 4) % 4) {
}

PauliString PauliString::single(std::size_t qubit, Pauli p) {
    if (qubit >= 64) {
        throw ConfigError("PauliString supports at most 64 qubits");
    }
    uint64_t bit = uint64_t{1} << qubit;
    auto code = static_cast<uint8_t>(p);
    return PauliString((code & 1) ? bit : 0, (code & 2) ? bit : 0);
}

PauliString PauliString::parse(std::string_view text) {
    std::string s(text);
    std::size_t pos = 0;
    int phase = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            pos++;
        }
    };
    skip_ws();
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') {
            phase += 2;
        }
        pos++;
    }
    if (pos < s.size() && s[pos] == 'i') {
        phase += 1;
        pos++;
    }
    PauliString result(0, 0, phase);
    skip_ws();
    if (pos < s.size() && s[pos] == 'I' && (pos + 1 == s.size() || std::isspace(static_cast<unsigned char>(s[pos + 1])))) {
        return result;
    }
    while (pos < s.size()) {
        char letter = s[pos++];
        Pauli p;
        switch (letter) {
            case 'X': p = Pauli::X; break;
            case 'Y': p = Pauli::Y; break;
            case 'Z': p = Pauli::Z; break;
            default: throw ConfigError("bad Pauli letter in '" + s + "'");
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            pos++;
        }
        if (start == pos) {
            throw ConfigError("missing qubit index in '" + s + "'");
        }
        auto q = static_cast<std::size_t>(std::stoul(s.substr(start, pos - start)));
        result *= single(q, p);
        skip_ws();
    }
    return result;
}

Complex PauliString::phase() const {
    return kIPowers[phase_];
}

Pauli PauliString::at(std::size_t qubit) const {
    uint8_t code = static_cast<uint8_t>(((xs_ >> qubit) & 1) | (((zs_ >> qubit) & 1) << 1));
    return static_cast<Pauli>(code);
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(popcount(xs_ | zs_));
}

bool PauliString::commutes_with(const PauliString &other) const {
    return ((popcount(xs_ & other.zs_) + popcount(zs_ & other.xs_)) & 1) == 0;
}

int PauliString::max_qubit() const {
    uint64_t m = xs_ | zs_;
    return m == 0 ? -1 : 63 - std::countl_zero(m);
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    // Each operand is i^(k + ny) X^x Z^z with X to the left of Z on every qubit.
    uint64_t x = xs_ ^ rhs.xs_;
    uint64_t z = zs_ ^ rhs.zs_;
    int k = phase_ + rhs.phase_ + popcount(xs_ & zs_) + popcount(rhs.xs_ & rhs.zs_) - popcount(x & z) +
            2 * popcount(zs_ & rhs.xs_);
    return PauliString(x, z, k);
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    *this = *this * rhs;
    return *this;
}

std::string PauliString::str() const {
    std::ostringstream out;
    static const char *kPhaseText[4] = {"+", "+i", "-", "-i"};
    out << kPhaseText[phase_];
    if (is_identity()) {
        out << "I";
        return out.str();
    }
    bool first = true;
    for (int q = 0; q <= max_qubit(); q++) {
        Pauli p = at(static_cast<std::size_t>(q));
        if (p == Pauli::I) {
            continue;
        }
        if (!first) {
            out << ' ';
        }
        first = false;
        out << "IXZY"[static_cast<int>(p)] << q;
    }
    return out.str();
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
    if (n_qubits > 30) {
        throw ConfigError("StateVector: too many qubits");
    }
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw ConfigError("StateVector: amplitude count does not match 2^n_qubits");
    }
}

StateVector StateVector::basis(std::size_t n_qubits, std::string_view bits) {
    if (bits.size() != n_qubits) {
        throw ConfigError(
            "basis state: bitstring length " + std::to_string(bits.size()) + " != n_qubits " +
            std::to_string(n_qubits));
    }
    uint64_t index = 0;
    for (std::size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            index |= uint64_t{1} << k;
        } else if (bits[k] != '0') {
            throw ConfigError("basis state: bitstring must contain only 0 and 1");
        }
    }
    return basis_index(n_qubits, index);
}

StateVector StateVector::basis_index(std::size_t n_qubits, uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dimension()) {
        throw ConfigError("basis state: index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::probability_one(std::size_t q) const {
    uint64_t bit = uint64_t{1} << q;
    double p1 = 0;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            p1 += std::norm(amps_[i]);
        }
    }
    return p1;
}

void StateVector::scale(Complex factor) {
    for (auto &a : amps_) {
        a *= factor;
    }
}

void StateVector::normalize() {
    double n = std::sqrt(norm_squared());
    if (n < kCollapseTolerance) {
        throw NumericalCollapseError("cannot normalize a zero vector");
    }
    scale(1.0 / n);
}

StateVector new_basis_state(std::size_t n_qubits, std::string_view bits) {
    return StateVector::basis(n_qubits, bits);
}

void apply_pauli(StateVector &state, const PauliString &p) {
    if (p.max_qubit() >= static_cast<int>(state.n_qubits())) {
        throw ConfigError("apply_pauli: Pauli " + p.str() + " touches a qubit outside the register");
    }
    uint64_t x = p.x_mask();
    uint64_t z = p.z_mask();
    Complex global = kIPowers[(p.phase_exponent() + popcount(x & z)) & 3];
    auto amps = state.amplitudes();
    const std::size_t dim = amps.size();
    if (x == 0) {
        for (std::size_t b = 0; b < dim; b++) {
            amps[b] *= (popcount(b & z) & 1) ? -global : global;
        }
        return;
    }
    // Pair up b and b^x; visit each pair once via the lowest set bit of x.
    uint64_t pivot = x & (~x + 1);
    for (std::size_t b = 0; b < dim; b++) {
        if (b & pivot) {
            continue;
        }
        std::size_t c = b ^ x;
        Complex ab = amps[b];
        Complex ac = amps[c];
        // P|b> = g (-1)^{|z&b|} |b^x>.
        amps[c] = ((popcount(b & z) & 1) ? -global : global) * ab;
        amps[b] = ((popcount(c & z) & 1) ? -global : global) * ac;
    }
}

int measure_qubit(StateVector &state, std::size_t q, double u) {
    if (q >= state.n_qubits()) {
        throw ConfigError("measure_qubit: qubit index out of range");
    }
    auto amps = state.amplitudes();
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = amps.size();
    double p0 = 0;
    double p1 = 0;
    for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
        for (std::size_t i = hi; i < hi + bit; i++) {
            p0 += std::norm(amps[i]);
            p1 += std::norm(amps[i + bit]);
        }
    }
    int outcome = (u * (p0 + p1) <= p0) ? 0 : 1;
    double kept = outcome == 0 ? p0 : p1;
    if (std::sqrt(kept) < kCollapseTolerance) {
        throw NumericalCollapseError("measure_qubit: selected branch has vanishing norm");
    }
    const double inv = 1.0 / std::sqrt(kept);
    const std::size_t keep = outcome == 0 ? 0 : bit;
    const std::size_t drop = bit - keep;
    for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
        for (std::size_t i = hi; i < hi + bit; i++) {
            amps[i + keep] *= inv;
            amps[i + drop] = 0.0;
        }
    }
    return outcome;
}

void reset_qubit(StateVector &state, std::size_t q) {
    if (q >= state.n_qubits()) {
        throw ConfigError("reset_qubit: qubit index out of range");
    }
    auto amps = state.amplitudes();
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = amps.size();
    double max0 = 0;
    double max1 = 0;
    for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
        for (std::size_t i = hi; i < hi + bit; i++) {
            max0 = std::max(max0, std::norm(amps[i]));
            max1 = std::max(max1, std::norm(amps[i + bit]));
        }
    }
    const double tol2 = kEntanglementTolerance * kEntanglementTolerance;
    if (max0 > tol2 && max1 > tol2) {
        throw ContractViolation("reset_qubit: qubit " + std::to_string(q) + " is not in a computational basis state");
    }
    const bool flip = max1 > tol2;
    for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
        for (std::size_t i = hi; i < hi + bit; i++) {
            if (flip) {
                amps[i] = amps[i + bit];
            }
            amps[i + bit] = 0.0;
        }
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw ConfigError("inner_product: dimension mismatch");
    }
    double re = 0;
    double im = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        // conj(a) * b
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ConfigError("inner_product: qubit count mismatch");
    }
    return inner_product(a.amplitudes(), b.amplitudes());
}

double max_abs_difference(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw ConfigError("max_abs_difference: dimension mismatch");
    }
    double m = 0;
    for (std::size_t i = 0; i < a.dimension(); i++) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace qecdist
