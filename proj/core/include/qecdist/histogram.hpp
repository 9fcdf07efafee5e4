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
#ifndef QECDIST_HISTOGRAM_HPP
#define QECDIST_HISTOGRAM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qecdist/metrics.hpp"

namespace qecdist {

/// Log10 bins over [1e-12, 1), five per decade, plus point masses for values below 1e-12
/// ("zero") and at or above 1 - 1e-9 ("one").
class LogHistogram {
   public:
    static constexpr std::size_t kLogBins = 60;
    static constexpr int kBinsPerDecade = 5;
    static constexpr double kLowEdge = 1e-12;
    static constexpr double kOneMassEdge = 1.0 - 1e-9;

    void add(double value);
    void merge(const LogHistogram &other);

    uint64_t zero_count() const { return zero_; }
    uint64_t one_count() const { return one_; }
    uint64_t bin_count(std::size_t bin) const { return bins_[bin]; }
    const std::array<uint64_t, kLogBins> &bins() const { return bins_; }
    uint64_t total() const;
    uint64_t interior_total() const;
    std::size_t occupied_interior_bins() const;

    static double bin_low(std::size_t bin);
    static double bin_high(std::size_t bin);
    /// Geometric centre of a bin.
    static double bin_mid(std::size_t bin);
    /// Interior bin holding value (values in the point masses return nullopt).
    static std::optional<std::size_t> bin_of(double value);

    /// Most populated interior bin refined by a parabola through it and its neighbours in
    /// log10 space. nullopt if every interior bin is empty.
    std::optional<double> mode() const;

    void set_counts(uint64_t zero, uint64_t one, const std::array<uint64_t, kLogBins> &bins);
    bool operator==(const LogHistogram &) const = default;

   private:
    uint64_t zero_ = 0;
    uint64_t one_ = 0;
    std::array<uint64_t, kLogBins> bins_{};
};

enum class MetricId { PFailL1, PFailPsi1, PFailPsi2, PCode, FidelitySq, Ratio, RatioDeficit };
inline constexpr std::size_t kMetricCount = 7;

std::string metric_name(MetricId id);
MetricId parse_metric_id(const std::string &name);
std::vector<MetricId> all_metrics();
/// Value of a metric for one trial; nullopt for the ratio metrics when the ratio is undefined.
std::optional<double> metric_value(const FailureMetrics &m, MetricId id);

/// One histogram per metric. Trials with an undefined ratio are counted in
/// ratio_undefined instead of the two ratio histograms.
struct HistogramSet {
    uint64_t trials = 0;
    uint64_t ratio_undefined = 0;
    std::array<LogHistogram, kMetricCount> histograms;

    void add(const FailureMetrics &m);
    void merge(const HistogramSet &other);
    const LogHistogram &operator[](MetricId id) const { return histograms[static_cast<std::size_t>(id)]; }
    LogHistogram &operator[](MetricId id) { return histograms[static_cast<std::size_t>(id)]; }
    bool operator==(const HistogramSet &) const = default;

    /// bin_low,bin_high,<metric>... with the zero mass as the first row and the one mass as the last.
    std::string csv() const;
};

}  // namespace qecdist

#endif
