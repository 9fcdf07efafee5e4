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

#ifndef QECDIST_STATEVECTOR_HPP
#define QECDIST_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qecdist {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kEntanglementTolerance = 1e-10;
inline constexpr double kCollapseTolerance = 1e-15;

/// Single-qubit Pauli letter. Encoded as (x bit) | (z bit << 1).
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// A tensor product of single-qubit Paulis with an overall phase i^k.
///
/// Stored as x/z bit masks (bit q set = letter on qubit q has an X/Z component,
/// Y has both) plus the exponent of i. Supports up to 64 qubits.
class PauliString {
   public:
    PauliString() = default;
    PauliString(uint64_t x_mask, uint64_t z_mask, int phase_exponent = 0);

    static PauliString single(std::size_t qubit, Pauli p);
    static PauliString x_on(uint64_t mask) { return PauliString(mask, 0); }
    static PauliString z_on(uint64_t mask) { return PauliString(0, mask); }
    /// Parses e.g. "X0 Z3 Y5", "-iX1", "I". Whitespace separated letter+index tokens.
    static PauliString parse(std::string_view text);

    uint64_t x_mask() const { return xs_; }
    uint64_t z_mask() const { return zs_; }
    /// Overall phase is i^phase_exponent(), in 0..3.
    int phase_exponent() const { return phase_; }
    Complex phase() const;
    Pauli at(std::size_t qubit) const;
    std::size_t weight() const;
    bool is_identity() const { return xs_ == 0 && zs_ == 0; }
    bool commutes_with(const PauliString &other) const;
    /// Highest qubit index touched, or -1 for the identity.
    int max_qubit() const;

    /// Operator product: (*this) * rhs, i.e. rhs acts first.
    PauliString operator*(const PauliString &rhs) const;
    PauliString &operator*=(const PauliString &rhs);
    bool operator==(const PauliString &other) const = default;

    /// Same letters, phase dropped.
    PauliString without_phase() const { return PauliString(xs_, zs_, 0); }
    std::string str() const;

   private:
    uint64_t xs_ = 0;
    uint64_t zs_ = 0;
    int phase_ = 0;
};

/// Dense statevector. Qubit 0 is the least-significant bit of the basis index.
class StateVector {
   public:
    explicit StateVector(std::size_t n_qubits);
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    /// Basis state from a bitstring; character k is the value of qubit k.
    static StateVector basis(std::size_t n_qubits, std::string_view bits);
    static StateVector basis_index(std::size_t n_qubits, uint64_t index);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    /// Probability that qubit q reads 1.
    double probability_one(std::size_t q) const;
    /// Multiplies every amplitude by a scalar (used by tests for global phases).
    void scale(Complex factor);
    void normalize();

   private:
    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

StateVector new_basis_state(std::size_t n_qubits, std::string_view bits);

/// Exact Pauli action including phase. Throws ConfigError if p touches a qubit >= n_qubits.
void apply_pauli(StateVector &state, const PauliString &p);

/// Projective Z measurement of qubit q driven by a uniform draw u in [0,1).
/// Outcome 0 iff u <= P(0); the surviving branch is renormalized.
int measure_qubit(StateVector &state, std::size_t q, double u);

/// Puts a post-measurement qubit back into |0>. Throws ContractViolation if q is entangled.
void reset_qubit(StateVector &state, std::size_t q);

/// <a|b> with conjugation on a.
Complex inner_product(const StateVector &a, const StateVector &b);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

/// Largest |a_i - b_i|.
double max_abs_difference(const StateVector &a, const StateVector &b);

}  // namespace qecdist

#endif
