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
#include "qecdist/stats.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qecdist/errors.hpp"

namespace qecdist {

Interval wilson_interval(uint64_t k, uint64_t n, double z) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (p + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::optional<double> identity_crossing(std::span<const double> x, std::span<const double> y) {
    auto g = [&](std::size_t i) { return y[i] - x[i]; };
    for (std::size_t i = 0; i + 1 < x.size(); i++) {
        double g0 = g(i);
        double g1 = g(i + 1);
        if (g0 == 0.0) {
            return x[i];
        }
        if ((g0 < 0.0) == (g1 < 0.0) && g1 != 0.0) {
            continue;
        }
        if (y[i] > 0.0 && y[i + 1] > 0.0) {
            double l0 = std::log(y[i]) - std::log(x[i]);
            double l1 = std::log(y[i + 1]) - std::log(x[i + 1]);
            double t = l0 / (l0 - l1);
            return std::exp(std::log(x[i]) + t * (std::log(x[i + 1]) - std::log(x[i])));
        }
        double t = g0 / (g0 - g1);
        return x[i] + t * (x[i + 1] - x[i]);
    }
    if (!x.empty() && g(x.size() - 1) == 0.0) {
        return x.back();
    }
    return std::nullopt;
}

std::optional<PseudoThreshold> estimate_pseudothreshold(std::span<const CurvePoint> curve) {
    std::vector<CurvePoint> pts(curve.begin(), curve.end());
    std::sort(pts.begin(), pts.end(), [](const CurvePoint &a, const CurvePoint &b) { return a.x < b.x; });
    std::vector<double> x, mid, lo, hi;
    for (const auto &p : pts) {
        Interval w = wilson_interval(p.failures, p.trials);
        x.push_back(p.x);
        mid.push_back(p.fraction());
        lo.push_back(w.low);
        hi.push_back(w.high);
    }
    auto centre = identity_crossing(x, mid);
    if (!centre) {
        return std::nullopt;
    }
    // A higher failure curve crosses the identity at a lower p.
    auto from_high = identity_crossing(x, hi);
    auto from_low = identity_crossing(x, lo);
    Interval ci{from_high.value_or(x.front()), from_low.value_or(x.back())};
    if (ci.low > ci.high) {
        std::swap(ci.low, ci.high);
    }
    ci.low = std::min(ci.low, *centre);
    ci.high = std::max(ci.high, *centre);
    return PseudoThreshold{*centre, ci};
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        throw ConfigError("fit_power_law: need at least three points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) {
            throw ConfigError("fit_power_law: values must be positive");
        }
        double lx = std::log10(x);
        double ly = std::log10(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(points.size());
    const double det = n * sxx - sx * sx;
    if (std::abs(det) < 1e-300) {
        throw ConfigError("fit_power_law: x values must differ");
    }
    const double slope = (n * sxy - sx * sy) / det;
    const double icept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (auto [x, y] : points) {
        double r = std::log10(y) - (icept + slope * std::log10(x));
        ss += r * r;
    }
    return {std::pow(10.0, icept), slope, std::sqrt(ss / n)};
}

std::optional<LognormalFit> fit_lognormal(const LogHistogram &hist) {
    if (hist.interior_total() < 100 || hist.occupied_interior_bins() < 2) {
        return std::nullopt;
    }
    // Normal equations for ln c = k0 + k1 x + k2 x^2 over the occupied bins, each bin weighted
    // by its count (the inverse variance of ln c under Poisson noise).
    std::array<std::array<double, 4>, 3> m{};
    for (std::size_t b = 0; b < LogHistogram::kLogBins; b++) {
        uint64_t c = hist.bin_count(b);
        if (c == 0) {
            continue;
        }
        const double w = static_cast<double>(c);
        double x = std::log10(LogHistogram::bin_mid(b));
        double y = std::log(static_cast<double>(c));
        std::array<double, 3> basis = {1.0, x, x * x};
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                m[i][j] += w * basis[i] * basis[j];
            }
            m[i][3] += w * basis[i] * y;
        }
    }
    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < 3; col++) {
        int piv = col;
        for (int r = col + 1; r < 3; r++) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) {
                piv = r;
            }
        }
        std::swap(m[col], m[piv]);
        if (std::abs(m[col][col]) < 1e-300) {
            return std::nullopt;
        }
        for (int r = 0; r < 3; r++) {
            if (r == col) {
                continue;
            }
            double f = m[r][col] / m[col][col];
            for (int k = col; k < 4; k++) {
                m[r][k] -= f * m[col][k];
            }
        }
    }
    const double k0 = m[0][3] / m[0][0];
    const double k1 = m[1][3] / m[1][1];
    const double k2 = m[2][3] / m[2][2];
    if (!(k2 < 0.0)) {
        return std::nullopt;
    }
    LognormalFit fit;
    fit.a = -k2;
    fit.b = std::pow(10.0, k1 / (2.0 * k2));
    uint64_t covered = 0;
    for (std::size_t b = 0; b < LogHistogram::kLogBins; b++) {
        uint64_t c = hist.bin_count(b);
        if (c == 0) {
            continue;
        }
        double x = std::log10(LogHistogram::bin_mid(b));
        double model = std::exp(k0 + k1 * x + k2 * x * x);
        double ratio = model / static_cast<double>(c);
        if (ratio <= 2.0 && ratio >= 0.5) {
            covered += c;
        }
    }
    fit.coverage = static_cast<double>(covered) / static_cast<double>(hist.total());
    return fit;
}

}  // namespace qecdist
