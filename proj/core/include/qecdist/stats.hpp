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
#ifndef QECDIST_STATS_HPP
#define QECDIST_STATS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qecdist/histogram.hpp"

namespace qecdist {

inline constexpr double kZ95 = 1.959963984540054;

struct Interval {
    double low;
    double high;

    bool operator==(const Interval &) const = default;
};

/// Wilson score interval for k successes in n trials.
Interval wilson_interval(uint64_t k, uint64_t n, double z = kZ95);

struct CurvePoint {
    double x;
    uint64_t failures;
    uint64_t trials;
    double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(trials); }
};

struct PseudoThreshold {
    double value;
    Interval ci;
};

/// Crossing of f(p) = p, interpolating log f - log p linearly in log p between the grid
/// points that bracket the sign change. The CI repeats the search on the Wilson lower and
/// upper curves. nullopt if the curve never crosses.
std::optional<PseudoThreshold> estimate_pseudothreshold(std::span<const CurvePoint> curve);

/// Crossing of an arbitrary sampled curve y(x) with y = x (no CI).
std::optional<double> identity_crossing(std::span<const double> x, std::span<const double> y);

struct PowerLawFit {
    double prefactor;
    double exponent;
    /// RMS residual in log10 y.
    double residual;
};

/// y = prefactor * x^exponent by least squares in log10. Throws ConfigError on fewer than 3
/// points or non-positive values.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

struct LognormalFit {
    /// count ~ exp(-a log10(b P)^2)
    double a;
    double b;
    double coverage;
};

/// Count-weighted quadratic fit of ln(count) against log10(bin centre) over the interior bins.
/// nullopt when fewer than 100 interior counts or only one bin is occupied, or the fitted
/// parabola opens upward.
std::optional<LognormalFit> fit_lognormal(const LogHistogram &hist);

}  // namespace qecdist

#endif
