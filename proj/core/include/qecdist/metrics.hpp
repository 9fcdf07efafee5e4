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
#ifndef QECDIST_METRICS_HPP
#define QECDIST_METRICS_HPP

#include <memory>
#include <string>
#include <vector>

#include "qecdist/code_layout.hpp"
#include "qecdist/statevector.hpp"

namespace qecdist {

enum class SubspaceLevel { L, L1, Psi1, Psi2 };

std::string subspace_level_name(SubspaceLevel level);

/// The level-2 logical set spans the whole data space; it has no failure metric attached.
inline constexpr std::size_t kSteaneL2Dimension = 128;

/// A data-qubit ket stored by its nonzero amplitudes.
struct SparseKet {
    std::vector<uint32_t> index;
    std::vector<Complex> amp;

    static SparseKet from_dense(std::span<const Complex> v);
    /// <ket|psi> for a dense psi.
    Complex dot(std::span<const Complex> psi) const;
    double norm_squared() const;
    StateVector dense(std::size_t n_qubits) const;
};

/// Orthonormal kets over the data qubits.
struct SubspaceBasis {
    SubspaceLevel level;
    std::size_t declared_dimension;
    std::size_t n_qubits;
    std::vector<SparseKet> kets;

    std::size_t dimension() const { return kets.size(); }
    StateVector dense_ket(std::size_t i) const { return kets[i].dense(n_qubits); }
    /// Sum of |<s|psi>|^2 over the basis, psi given on the data qubits.
    double captured_weight(std::span<const Complex> psi) const;
};

std::size_t declared_dimension(CodeId code, SubspaceLevel level);

/// Kets generated from |0_L>, |1_L> (level L or L1). Surface-17 skips X2, X7, Z3, Z8.
/// Throws MetricDefect if the orthonormalized rank differs from the declared dimension.
SubspaceBasis build_logical_subspace(const CodeLayout &code, SubspaceLevel level);
/// Shared immutable copy of build_logical_subspace, built on first use.
std::shared_ptr<const SubspaceBasis> cached_logical_subspace(CodeId code, SubspaceLevel level);

/// Kets generated from psi0 (data qubits only, normalized) at level Psi1 or Psi2.
SubspaceBasis build_psi_subspace(const StateVector &psi0, const CodeLayout &code, SubspaceLevel level);

/// The Pauli operators whose action on the seed state(s) generates a level.
std::vector<PauliString> generating_paulis(const CodeLayout &code, SubspaceLevel level);

struct MetricBases {
    std::shared_ptr<const SubspaceBasis> logical;
    std::shared_ptr<const SubspaceBasis> logical_plus_one;
    std::shared_ptr<const SubspaceBasis> psi_plus_one;
    std::shared_ptr<const SubspaceBasis> psi_plus_two;

    static MetricBases for_state(const StateVector &psi0, const CodeLayout &code);
};

struct FailureMetrics {
    double p_fail_l1 = 0.0;
    double p_fail_psi1 = 0.0;
    double p_fail_psi2 = 0.0;
    double p_code = 1.0;
    double fidelity_sq = 1.0;
    /// fidelity_sq / p_code; meaningless when ratio_defined is false.
    double ratio = 1.0;
    bool ratio_defined = true;
};

/// Evaluates every metric on the data factor of psi_t (ancillas must be in |0>).
/// fidelity_sq is taken against alpha|0_L> + beta|1_L>.
FailureMetrics compute_metrics(
    const StateVector &psi_t, Complex alpha, Complex beta, const MetricBases &bases, const CodeLayout &code);

/// Same, with psi_t already restricted to the data qubits.
FailureMetrics compute_data_metrics(
    const StateVector &data_t, Complex alpha, Complex beta, const MetricBases &bases, const CodeLayout &code);

struct BoundsCheck {
    bool ok = true;
    std::vector<std::string> violations;
    /// Slack of each inequality (right side minus left side).
    double slack_l1_vs_psi1 = 0.0;
    double slack_psi2_vs_psi1 = 0.0;
    double slack_fidelity_vs_code = 0.0;
    double slack_code_vs_l1 = 0.0;
};

inline constexpr double kBoundsSlack = 1e-10;

BoundsCheck check_bounds(const FailureMetrics &m);
/// Throws MetricDefect naming the violated inequalities.
void require_bounds(const FailureMetrics &m);

}  // namespace qecdist

#endif
