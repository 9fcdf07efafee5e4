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
#include "qecdist/metrics.hpp"

#include <algorithm>
#include <bit>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

constexpr double kRankTolerance = 1e-8;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

using Sector = std::pair<uint32_t, uint32_t>;

/// Modified Gram-Schmidt of candidates grouped by syndrome sector. Kets from different sectors
/// are orthogonal already, so each group is orthonormalized on its own.
std::vector<SparseKet> orthonormalize(std::size_t n_qubits, std::vector<std::pair<Sector, SparseKet>> candidates) {
    std::map<Sector, std::vector<SparseKet>> sectors;
    std::vector<Sector> order;
    std::vector<Complex> scratch;
    for (auto &[sector, ket] : candidates) {
        auto &group = sectors[sector];
        if (group.empty()) {
            order.push_back(sector);
        }
        const double n0 = std::sqrt(ket.norm_squared());
        SparseKet v;
        double n = n0;
        if (group.empty()) {
            v = std::move(ket);
        } else {
            scratch.assign(std::size_t{1} << n_qubits, Complex(0.0, 0.0));
            for (std::size_t k = 0; k < ket.index.size(); k++) {
                scratch[ket.index[k]] = ket.amp[k];
            }
            for (const SparseKet &b : group) {
                Complex c = b.dot(scratch);
                for (std::size_t k = 0; k < b.index.size(); k++) {
                    scratch[b.index[k]] -= c * b.amp[k];
                }
            }
            v = SparseKet::from_dense(scratch);
            n = std::sqrt(v.norm_squared());
        }
        if (n < kRankTolerance * std::max(n0, 1.0)) {
            continue;
        }
        for (Complex &x : v.amp) {
            x /= n;
        }
        group.push_back(std::move(v));
    }
    std::vector<SparseKet> out;
    for (const auto &s : order) {
        for (SparseKet &v : sectors[s]) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

/// P applied to a sparse ket: |b> -> phase(b) |b ^ x>.
SparseKet apply_pauli_sparse(const SparseKet &v, const PauliString &p) {
    const uint64_t x = p.x_mask();
    const uint64_t z = p.z_mask();
    static const Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex g = kI[(p.phase_exponent() + std::popcount(x & z)) & 3];
    SparseKet out;
    out.index.reserve(v.index.size());
    out.amp.reserve(v.amp.size());
    for (std::size_t k = 0; k < v.index.size(); k++) {
        const uint64_t b = v.index[k];
        out.index.push_back(static_cast<uint32_t>(b ^ x));
        out.amp.push_back((std::popcount(b & z) & 1) ? -g * v.amp[k] : g * v.amp[k]);
    }
    return out;
}

void require_rank(const SubspaceBasis &b, const CodeLayout &code) {
    if (b.kets.size() != b.declared_dimension) {
        std::ostringstream msg;
        msg << code_name(code.id) << ' ' << subspace_level_name(b.level) << " basis has rank " << b.kets.size()
            << ", expected " << b.declared_dimension;
        throw MetricDefect(msg.str());
    }
}

bool excluded(const CodeLayout &code, std::size_t q, Pauli p) {
    if (p == Pauli::X) {
        return (code.excluded_x_errors >> q) & 1;
    }
    if (p == Pauli::Z) {
        return (code.excluded_z_errors >> q) & 1;
    }
    return false;
}

}  // namespace

std::string subspace_level_name(SubspaceLevel level) {
    switch (level) {
        case SubspaceLevel::L:
            return "L";
        case SubspaceLevel::L1:
            return "L+1";
        case SubspaceLevel::Psi1:
            return "psi+1";
        case SubspaceLevel::Psi2:
            return "psi+2";
    }
    return "?";
}

SparseKet SparseKet::from_dense(std::span<const Complex> v) {
    SparseKet k;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (v[i] != Complex(0.0, 0.0)) {
            k.index.push_back(static_cast<uint32_t>(i));
            k.amp.push_back(v[i]);
        }
    }
    return k;
}

Complex SparseKet::dot(std::span<const Complex> psi) const {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < index.size(); k++) {
        const Complex a = amp[k];
        const Complex b = psi[index[k]];
        re += a.real() * b.real() + a.imag() * b.imag();
        im += a.real() * b.imag() - a.imag() * b.real();
    }
    return {re, im};
}

double SparseKet::norm_squared() const {
    double t = 0.0;
    for (const Complex &a : amp) {
        t += std::norm(a);
    }
    return t;
}

StateVector SparseKet::dense(std::size_t n_qubits) const {
    std::vector<Complex> v(std::size_t{1} << n_qubits);
    for (std::size_t k = 0; k < index.size(); k++) {
        v[index[k]] = amp[k];
    }
    return StateVector(n_qubits, std::move(v));
}

double SubspaceBasis::captured_weight(std::span<const Complex> psi) const {
    double total = 0.0;
    for (const SparseKet &k : kets) {
        total += std::norm(k.dot(psi));
    }
    return total;
}

std::size_t declared_dimension(CodeId code, SubspaceLevel level) {
    static constexpr std::array<std::size_t, 4> steane = {2, 44, 22, 64};
    // X1|psi> = X2|psi>, X6 = X7, Z0 = Z3, Z5 = Z8 remove four of the 28 psi+1 kets.
    static constexpr std::array<std::size_t, 4> surface = {2, 48, 24, 64};
    const auto &t = code == CodeId::Steane ? steane : surface;
    return t[static_cast<std::size_t>(level)];
}

std::vector<PauliString> generating_paulis(const CodeLayout &code, SubspaceLevel level) {
    std::vector<PauliString> out{PauliString()};
    const std::size_t n = code.n_data;
    auto singles = [&](bool skip_excluded, bool with_y) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            if (p == Pauli::Y && !with_y) {
                continue;
            }
            for (std::size_t q = 0; q < n; q++) {
                if (skip_excluded && excluded(code, q, p)) {
                    continue;
                }
                out.push_back(PauliString::single(q, p));
            }
        }
    };
    switch (level) {
        case SubspaceLevel::L:
            break;
        case SubspaceLevel::L1:
            singles(true, true);
            break;
        case SubspaceLevel::Psi1:
            singles(false, true);
            break;
        case SubspaceLevel::Psi2:
            singles(true, false);
            for (std::size_t q = 0; q < n; q++) {
                if (excluded(code, q, Pauli::X)) {
                    continue;
                }
                for (std::size_t r = 0; r < n; r++) {
                    if (excluded(code, r, Pauli::Z)) {
                        continue;
                    }
                    out.push_back(PauliString::single(q, Pauli::X) * PauliString::single(r, Pauli::Z));
                }
            }
            break;
    }
    return out;
}

SubspaceBasis build_logical_subspace(const CodeLayout &code, SubspaceLevel level) {
    if (level != SubspaceLevel::L && level != SubspaceLevel::L1) {
        throw ConfigError("build_logical_subspace: level must be L or L+1");
    }
    auto [zero, one] = code.logical_basis();
    const SparseKet seeds[2] = {SparseKet::from_dense(zero.amplitudes()), SparseKet::from_dense(one.amplitudes())};
    std::vector<std::pair<Sector, SparseKet>> cands;
    for (const PauliString &p : generating_paulis(code, level)) {
        for (const SparseKet &seed : seeds) {
            cands.emplace_back(code.sector(p), apply_pauli_sparse(seed, p));
        }
    }
    SubspaceBasis b{level, declared_dimension(code.id, level), code.n_data, orthonormalize(code.n_data, std::move(cands))};
    require_rank(b, code);
    return b;
}

std::shared_ptr<const SubspaceBasis> cached_logical_subspace(CodeId code, SubspaceLevel level) {
    static std::mutex mu;
    static std::map<std::pair<CodeId, SubspaceLevel>, std::shared_ptr<const SubspaceBasis>> cache;
    std::lock_guard lock(mu);
    auto &slot = cache[{code, level}];
    if (!slot) {
        slot = std::make_shared<const SubspaceBasis>(build_logical_subspace(layout_for(code), level));
    }
    return slot;
}

SubspaceBasis build_psi_subspace(const StateVector &psi0, const CodeLayout &code, SubspaceLevel level) {
    if (level != SubspaceLevel::Psi1 && level != SubspaceLevel::Psi2) {
        throw ConfigError("build_psi_subspace: level must be psi+1 or psi+2");
    }
    if (psi0.n_qubits() != code.n_data) {
        throw ConfigError("build_psi_subspace: psi0 must live on the data qubits");
    }
    if (std::abs(psi0.norm_squared() - 1.0) > kNormTolerance) {
        throw ConfigError("build_psi_subspace: psi0 is not normalized");
    }
    const SparseKet seed = SparseKet::from_dense(psi0.amplitudes());
    std::vector<std::pair<Sector, SparseKet>> cands;
    for (const PauliString &p : generating_paulis(code, level)) {
        cands.emplace_back(code.sector(p), apply_pauli_sparse(seed, p));
    }
    SubspaceBasis b{level, declared_dimension(code.id, level), code.n_data, orthonormalize(code.n_data, std::move(cands))};
    require_rank(b, code);
    return b;
}

MetricBases MetricBases::for_state(const StateVector &psi0, const CodeLayout &code) {
    MetricBases b;
    b.logical = cached_logical_subspace(code.id, SubspaceLevel::L);
    b.logical_plus_one = cached_logical_subspace(code.id, SubspaceLevel::L1);
    b.psi_plus_one = std::make_shared<const SubspaceBasis>(build_psi_subspace(psi0, code, SubspaceLevel::Psi1));
    b.psi_plus_two = std::make_shared<const SubspaceBasis>(build_psi_subspace(psi0, code, SubspaceLevel::Psi2));
    return b;
}

FailureMetrics compute_data_metrics(
    const StateVector &data_t, Complex alpha, Complex beta, const MetricBases &bases, const CodeLayout &code) {
    if (data_t.n_qubits() != code.n_data) {
        throw ConfigError("compute_metrics: state must live on the data qubits");
    }
    auto psi = data_t.amplitudes();
    FailureMetrics m;
    m.p_fail_l1 = clamp01(1.0 - bases.logical_plus_one->captured_weight(psi));
    m.p_fail_psi1 = clamp01(1.0 - bases.psi_plus_one->captured_weight(psi));
    m.p_fail_psi2 = clamp01(1.0 - bases.psi_plus_two->captured_weight(psi));
    const auto &lk = bases.logical->kets;
    m.p_code = clamp01(bases.logical->captured_weight(psi));
    // The L basis is |0_L>, |1_L> themselves: they sit in one sector and are already orthogonal.
    Complex a0 = lk[0].dot(psi);
    Complex a1 = lk[1].dot(psi);
    m.fidelity_sq = clamp01(std::norm(std::conj(alpha) * a0 + std::conj(beta) * a1));
    if (m.p_code < 1e-14) {
        m.ratio_defined = false;
        m.ratio = 0.0;
    } else {
        m.ratio = clamp01(m.fidelity_sq / m.p_code);
    }
    return m;
}

FailureMetrics compute_metrics(
    const StateVector &psi_t, Complex alpha, Complex beta, const MetricBases &bases, const CodeLayout &code) {
    return compute_data_metrics(data_factor(psi_t, code), alpha, beta, bases, code);
}

BoundsCheck check_bounds(const FailureMetrics &m) {
    BoundsCheck c;
    c.slack_l1_vs_psi1 = m.p_fail_psi1 - m.p_fail_l1;
    c.slack_psi2_vs_psi1 = m.p_fail_psi1 - m.p_fail_psi2;
    c.slack_fidelity_vs_code = m.p_code - m.fidelity_sq;
    c.slack_code_vs_l1 = (1.0 - m.p_fail_l1) - m.p_code;
    auto need = [&](double slack, const char *what) {
        if (slack < -kBoundsSlack) {
            c.ok = false;
            std::ostringstream s;
            s << what << " violated by " << -slack;
            c.violations.push_back(s.str());
        }
    };
    need(c.slack_l1_vs_psi1, "P_fail(L+1) <= P_fail(psi+1)");
    need(c.slack_psi2_vs_psi1, "P_fail(psi+2) <= P_fail(psi+1)");
    need(c.slack_fidelity_vs_code, "F^2 <= P_code");
    need(c.slack_code_vs_l1 + kBoundsSlack, "P_code <= 1 - P_fail(L+1)");
    return c;
}

void require_bounds(const FailureMetrics &m) {
    BoundsCheck c = check_bounds(m);
    if (!c.ok) {
        std::ostringstream s;
        s << "metric bounds violated:";
        for (const auto &v : c.violations) {
            s << ' ' << v << ';';
        }
        s << " p_fail_l1=" << m.p_fail_l1 << " p_fail_psi1=" << m.p_fail_psi1 << " p_fail_psi2=" << m.p_fail_psi2
          << " p_code=" << m.p_code << " fidelity_sq=" << m.fidelity_sq;
        throw MetricDefect(s.str());
    }
}

}  // namespace qecdist
