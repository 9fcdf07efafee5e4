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
#include <gtest/gtest.h>

#include <cmath>

#include "qecdist/errors.hpp"
#include "qecdist/metrics.hpp"
#include "qecdist/rng.hpp"
#include "test_util.hpp"

namespace qecdist {
namespace {

using testing::MatrixXc;
using testing::VectorXc;

struct Input {
    Complex alpha;
    Complex beta;
};

Input angles(double theta, double phi) { return {std::cos(theta), std::polar(std::sin(theta), phi)}; }

/// Generated vectors of a level, built densely from the Pauli list.
std::vector<VectorXc> generated(const CodeLayout &code, SubspaceLevel level, const StateVector &psi0) {
    std::vector<StateVector> seeds;
    if (level == SubspaceLevel::L || level == SubspaceLevel::L1) {
        auto [zero, one] = code.logical_basis();
        seeds = {zero, one};
    } else {
        seeds = {psi0};
    }
    std::vector<VectorXc> out;
    for (const PauliString &p : generating_paulis(code, level)) {
        for (const StateVector &s : seeds) {
            out.push_back(testing::pauli_matrix(p, code.n_data) * testing::to_eigen(s));
        }
    }
    return out;
}

MatrixXc oracle_basis(const CodeLayout &code, SubspaceLevel level, const StateVector &psi0) {
    return testing::span_basis(generated(code, level, psi0));
}

const CodeLayout &layout(CodeId id) { return layout_for(id); }

TEST(subspace, steane_declared_dimensions) {
    const auto &c = steane_layout();
    StateVector psi0 = c.encoded_data_state(angles(0.7, 1.1).alpha, angles(0.7, 1.1).beta);
    EXPECT_EQ(build_logical_subspace(c, SubspaceLevel::L).dimension(), 2u);
    EXPECT_EQ(build_logical_subspace(c, SubspaceLevel::L1).dimension(), 44u);
    EXPECT_EQ(build_psi_subspace(psi0, c, SubspaceLevel::Psi1).dimension(), 22u);
    EXPECT_EQ(build_psi_subspace(psi0, c, SubspaceLevel::Psi2).dimension(), 64u);
    EXPECT_EQ(kSteaneL2Dimension, 128u);
}

TEST(subspace, dimensions_match_gram_rank_oracle) {
    for (CodeId id : {CodeId::Steane, CodeId::Surface17}) {
        const auto &c = layout(id);
        Input in = angles(0.9, 2.3);
        StateVector psi0 = c.encoded_data_state(in.alpha, in.beta);
        for (SubspaceLevel level : {SubspaceLevel::L, SubspaceLevel::L1, SubspaceLevel::Psi1, SubspaceLevel::Psi2}) {
            SubspaceBasis b = level == SubspaceLevel::L || level == SubspaceLevel::L1 ? build_logical_subspace(c, level)
                                                                                       : build_psi_subspace(psi0, c, level);
            auto rank = static_cast<std::size_t>(oracle_basis(c, level, psi0).cols());
            EXPECT_EQ(b.dimension(), rank) << code_name(id) << ' ' << subspace_level_name(level);
            EXPECT_EQ(declared_dimension(id, level), rank);
        }
    }
    EXPECT_EQ(declared_dimension(CodeId::Surface17, SubspaceLevel::L1), 48u);
}

TEST(subspace, bases_are_orthonormal) {
    for (CodeId id : {CodeId::Steane, CodeId::Surface17}) {
        const auto &c = layout(id);
        StateVector psi0 = c.encoded_data_state(angles(1.2, 0.4).alpha, angles(1.2, 0.4).beta);
        for (const SubspaceBasis &b :
             {build_logical_subspace(c, SubspaceLevel::L1), build_psi_subspace(psi0, c, SubspaceLevel::Psi1),
              build_psi_subspace(psi0, c, SubspaceLevel::Psi2)}) {
            std::vector<StateVector> dense;
            for (std::size_t i = 0; i < b.dimension(); i++) {
                dense.push_back(b.dense_ket(i));
            }
            for (std::size_t i = 0; i < dense.size(); i++) {
                EXPECT_NEAR(dense[i].norm_squared(), 1.0, 1e-12);
                for (std::size_t j = 0; j < i; j++) {
                    ASSERT_LT(std::abs(inner_product(dense[i], dense[j])), 1e-10);
                }
                // idempotence: a basis ket is fully captured by its own basis
                EXPECT_NEAR(b.captured_weight(dense[i].amplitudes()), 1.0, 1e-12);
            }
        }
    }
}

TEST(subspace, logical_lies_inside_logical_plus_one) {
    for (CodeId id : {CodeId::Steane, CodeId::Surface17}) {
        auto l = cached_logical_subspace(id, SubspaceLevel::L);
        auto l1 = cached_logical_subspace(id, SubspaceLevel::L1);
        for (std::size_t i = 0; i < l->dimension(); i++) {
            StateVector k = l->dense_ket(i);
            EXPECT_LT(1.0 - l1->captured_weight(k.amplitudes()), 1e-10);
        }
    }
}

TEST(subspace, psi_level_rejects_logical_levels) {
    const auto &c = steane_layout();
    EXPECT_THROW(build_psi_subspace(c.encoded_data_state(1.0, 0.0), c, SubspaceLevel::L1), ConfigError);
    EXPECT_THROW(build_logical_subspace(c, SubspaceLevel::Psi1), ConfigError);
}

FailureMetrics metrics_for(const CodeLayout &c, Input in, const StateVector &data_t) {
    StateVector psi0 = c.encoded_data_state(in.alpha, in.beta);
    MetricBases b = MetricBases::for_state(psi0, c);
    return compute_data_metrics(data_t, in.alpha, in.beta, b, c);
}

TEST(failure_metrics, unchanged_state) {
    for (CodeId id : {CodeId::Steane, CodeId::Surface17}) {
        const auto &c = layout(id);
        Input in = angles(0.5, 2.0);
        FailureMetrics m = metrics_for(c, in, c.encoded_data_state(in.alpha, in.beta));
        EXPECT_LT(m.p_fail_l1, 1e-12);
        EXPECT_LT(m.p_fail_psi1, 1e-12);
        EXPECT_LT(m.p_fail_psi2, 1e-12);
        EXPECT_NEAR(m.p_code, 1.0, 1e-12);
        EXPECT_NEAR(m.fidelity_sq, 1.0, 1e-12);
        EXPECT_TRUE(m.ratio_defined);
        EXPECT_NEAR(m.ratio, 1.0, 1e-12);
        BoundsCheck bc = check_bounds(m);
        EXPECT_TRUE(bc.ok);
        EXPECT_NEAR(bc.slack_fidelity_vs_code, 0.0, 1e-12);
        EXPECT_NEAR(bc.slack_code_vs_l1, 0.0, 1e-12);
    }
}

TEST(failure_metrics, logical_flip_of_zero) {
    for (CodeId id : {CodeId::Steane, CodeId::Surface17}) {
        const auto &c = layout(id);
        StateVector t = c.encoded_data_state(1.0, 0.0);
        apply_pauli(t, PauliString::x_on(c.logical_x));
        FailureMetrics m = metrics_for(c, {1.0, 0.0}, t);
        EXPECT_LT(m.p_fail_l1, 1e-12);
        EXPECT_NEAR(m.p_code, 1.0, 1e-12);
        EXPECT_LT(m.fidelity_sq, 1e-12);
    }
}

TEST(failure_metrics, logical_flip_of_generic_input) {
    // X_L psi0 is orthogonal to every detectable single-error ket, so only the overlap with psi0
    // itself survives: P = 1 - sin^2(2 theta) cos^2(phi).
    const auto &c = steane_layout();
    for (auto [theta, phi] : {std::pair{0.3, 0.5}, std::pair{1.0, 2.5}, std::pair{0.785, 0.1}}) {
        Input in = angles(theta, phi);
        StateVector psi0 = c.encoded_data_state(in.alpha, in.beta);
        StateVector t = psi0;
        apply_pauli(t, PauliString::x_on(c.logical_x));
        FailureMetrics m = metrics_for(c, in, t);
        double oracle = testing::projection_failure(oracle_basis(c, SubspaceLevel::Psi1, psi0), testing::to_eigen(t));
        EXPECT_NEAR(m.p_fail_psi1, oracle, 1e-10);
        double s2 = std::sin(2 * theta);
        EXPECT_NEAR(m.p_fail_psi1, 1.0 - s2 * s2 * std::cos(phi) * std::cos(phi), 1e-10);
    }
}

TEST(failure_metrics, two_error_kets_match_projection_oracle) {
    RngStream rng(3, 0);
    for (CodeId id : {CodeId::Steane, CodeId::Surface17}) {
        const auto &c = layout(id);
        for (int rep = 0; rep < 4; rep++) {
            Input in = angles(0.2 + 1.3 * rng.uniform(), 6.28 * rng.uniform());
            StateVector psi0 = c.encoded_data_state(in.alpha, in.beta);
            std::size_t q = rep % 2 == 0 ? 0 : 4;
            std::size_t r = rep < 2 ? 1 : 5;
            StateVector t = psi0;
            apply_pauli(t, PauliString::single(q, Pauli::X) * PauliString::single(r, Pauli::Z));
            FailureMetrics m = metrics_for(c, in, t);
            VectorXc v = testing::to_eigen(t);
            EXPECT_NEAR(m.p_fail_psi2, testing::projection_failure(oracle_basis(c, SubspaceLevel::Psi2, psi0), v), 1e-10);
            EXPECT_NEAR(m.p_fail_psi1, testing::projection_failure(oracle_basis(c, SubspaceLevel::Psi1, psi0), v), 1e-10);
            EXPECT_NEAR(m.p_fail_l1, testing::projection_failure(oracle_basis(c, SubspaceLevel::L1, psi0), v), 1e-10);
            EXPECT_LT(m.p_fail_psi2, 1e-10);
            EXPECT_GT(m.p_fail_psi1, 1e-3);
        }
    }
}

TEST(failure_metrics, random_states_match_projection_oracle) {
    RngStream rng(4, 0);
    for (CodeId id : {CodeId::Steane, CodeId::Surface17}) {
        const auto &c = layout(id);
        Input in = angles(0.6, 1.9);
        StateVector psi0 = c.encoded_data_state(in.alpha, in.beta);
        // small random perturbation of psi0 spread over the whole space
        StateVector t = psi0;
        for (std::size_t i = 0; i < t.dimension(); i++) {
            t[i] += 0.05 * Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
        }
        t.normalize();
        FailureMetrics m = metrics_for(c, in, t);
        VectorXc v = testing::to_eigen(t);
        EXPECT_NEAR(m.p_fail_l1, testing::projection_failure(oracle_basis(c, SubspaceLevel::L1, psi0), v), 1e-10);
        EXPECT_NEAR(m.p_fail_psi1, testing::projection_failure(oracle_basis(c, SubspaceLevel::Psi1, psi0), v), 1e-10);
        EXPECT_NEAR(m.p_fail_psi2, testing::projection_failure(oracle_basis(c, SubspaceLevel::Psi2, psi0), v), 1e-10);
        EXPECT_NEAR(m.p_code, 1.0 - testing::projection_failure(oracle_basis(c, SubspaceLevel::L, psi0), v), 1e-10);
        EXPECT_NEAR(m.fidelity_sq, std::norm(inner_product(psi0, t)), 1e-12);
        EXPECT_TRUE(check_bounds(m).ok);
    }
}

TEST(failure_metrics, global_phase_invariance) {
    const auto &c = surface17_layout();
    Input in = angles(0.8, 0.3);
    StateVector t = c.encoded_data_state(in.alpha, in.beta);
    apply_pauli(t, PauliString::parse("X3 Z7"));
    for (std::size_t i = 0; i < t.dimension(); i += 7) {
        t[i] += 0.01;
    }
    t.normalize();
    FailureMetrics a = metrics_for(c, in, t);
    t.scale(std::polar(1.0, 2.1));
    FailureMetrics b = metrics_for(c, in, t);
    EXPECT_NEAR(a.p_fail_l1, b.p_fail_l1, 1e-14);
    EXPECT_NEAR(a.p_fail_psi1, b.p_fail_psi1, 1e-14);
    EXPECT_NEAR(a.p_fail_psi2, b.p_fail_psi2, 1e-14);
    EXPECT_NEAR(a.p_code, b.p_code, 1e-14);
    EXPECT_NEAR(a.fidelity_sq, b.fidelity_sq, 1e-14);
}

TEST(failure_metrics, full_register_requires_clean_ancillas) {
    const auto &c = steane_layout();
    StateVector full = c.encode(1.0, 0.0);
    MetricBases b = MetricBases::for_state(c.encoded_data_state(1.0, 0.0), c);
    EXPECT_NEAR(compute_metrics(full, 1.0, 0.0, b, c).fidelity_sq, 1.0, 1e-12);
    apply_pauli(full, PauliString::parse("X8"));
    EXPECT_THROW(compute_metrics(full, 1.0, 0.0, b, c), ContractViolation);
}

TEST(bounds, negative_control_names_the_inequality) {
    FailureMetrics m;
    m.fidelity_sq = 0.5;
    m.p_code = 0.4;
    BoundsCheck bc = check_bounds(m);
    EXPECT_FALSE(bc.ok);
    ASSERT_FALSE(bc.violations.empty());
    EXPECT_NE(bc.violations.front().find("F^2 <= P_code"), std::string::npos);
    EXPECT_THROW(require_bounds(m), MetricDefect);
}

TEST(bounds, psi1_must_dominate) {
    FailureMetrics m;
    m.p_fail_l1 = 0.2;
    m.p_fail_psi1 = 0.1;
    m.p_code = 0.5;
    m.fidelity_sq = 0.5;
    EXPECT_FALSE(check_bounds(m).ok);
}

}  // namespace
}  // namespace qecdist
