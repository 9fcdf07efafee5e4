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
#include "qecdist/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qecdist/errors.hpp"

namespace qecdist {

namespace {

constexpr std::array<const char *, kMetricCount> kMetricNames = {
    "p_fail_l1", "p_fail_psi1", "p_fail_psi2", "p_code", "fidelity_sq", "ratio", "ratio_deficit"};

}  // namespace

double LogHistogram::bin_low(std::size_t bin) {
    return std::pow(10.0, -12.0 + static_cast<double>(bin) / kBinsPerDecade);
}

double LogHistogram::bin_high(std::size_t bin) { return bin_low(bin + 1); }

double LogHistogram::bin_mid(std::size_t bin) {
    return std::pow(10.0, -12.0 + (static_cast<double>(bin) + 0.5) / kBinsPerDecade);
}

std::optional<std::size_t> LogHistogram::bin_of(double value) {
    if (!(value >= kLowEdge) || value >= kOneMassEdge) {
        return std::nullopt;
    }
    auto bin = static_cast<std::size_t>(std::floor((std::log10(value) + 12.0) * kBinsPerDecade));
    // Guard the edges against log10 round-off.
    while (bin > 0 && value < bin_low(bin)) {
        bin--;
    }
    while (bin + 1 < kLogBins && value >= bin_low(bin + 1)) {
        bin++;
    }
    return std::min(bin, kLogBins - 1);
}

void LogHistogram::add(double value) {
    if (std::isnan(value)) {
        throw MetricDefect("histogram: NaN metric value");
    }
    if (value < kLowEdge) {
        zero_++;
    } else if (value >= kOneMassEdge) {
        one_++;
    } else {
        bins_[*bin_of(value)]++;
    }
}

void LogHistogram::merge(const LogHistogram &other) {
    zero_ += other.zero_;
    one_ += other.one_;
    for (std::size_t i = 0; i < kLogBins; i++) {
        bins_[i] += other.bins_[i];
    }
}

uint64_t LogHistogram::interior_total() const {
    uint64_t t = 0;
    for (uint64_t c : bins_) {
        t += c;
    }
    return t;
}

uint64_t LogHistogram::total() const { return zero_ + one_ + interior_total(); }

std::size_t LogHistogram::occupied_interior_bins() const {
    std::size_t n = 0;
    for (uint64_t c : bins_) {
        n += c > 0 ? 1 : 0;
    }
    return n;
}

std::optional<double> LogHistogram::mode() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < kLogBins; i++) {
        if (bins_[i] > bins_[best]) {
            best = i;
        }
    }
    if (bins_[best] == 0) {
        return std::nullopt;
    }
    double x = std::log10(bin_mid(best));
    if (best > 0 && best + 1 < kLogBins) {
        double ym = static_cast<double>(bins_[best - 1]);
        double y0 = static_cast<double>(bins_[best]);
        double yp = static_cast<double>(bins_[best + 1]);
        double denom = ym - 2.0 * y0 + yp;
        if (denom < 0.0) {
            double shift = 0.5 * (ym - yp) / denom;
            x += std::clamp(shift, -0.5, 0.5) / kBinsPerDecade;
        }
    }
    return std::pow(10.0, x);
}

void LogHistogram::set_counts(uint64_t zero, uint64_t one, const std::array<uint64_t, kLogBins> &bins) {
    zero_ = zero;
    one_ = one;
    bins_ = bins;
}

std::string metric_name(MetricId id) { return kMetricNames[static_cast<std::size_t>(id)]; }

MetricId parse_metric_id(const std::string &name) {
    for (std::size_t i = 0; i < kMetricCount; i++) {
        if (name == kMetricNames[i]) {
            return static_cast<MetricId>(i);
        }
    }
    throw ConfigError("unknown metric '" + name + "'");
}

std::vector<MetricId> all_metrics() {
    std::vector<MetricId> out;
    for (std::size_t i = 0; i < kMetricCount; i++) {
        out.push_back(static_cast<MetricId>(i));
    }
    return out;
}

std::optional<double> metric_value(const FailureMetrics &m, MetricId id) {
    switch (id) {
        case MetricId::PFailL1:
            return m.p_fail_l1;
        case MetricId::PFailPsi1:
            return m.p_fail_psi1;
        case MetricId::PFailPsi2:
            return m.p_fail_psi2;
        case MetricId::PCode:
            return m.p_code;
        case MetricId::FidelitySq:
            return m.fidelity_sq;
        case MetricId::Ratio:
            return m.ratio_defined ? std::optional(m.ratio) : std::nullopt;
        case MetricId::RatioDeficit:
            return m.ratio_defined ? std::optional(1.0 - m.ratio) : std::nullopt;
    }
    return std::nullopt;
}

void HistogramSet::add(const FailureMetrics &m) {
    trials++;
    if (!m.ratio_defined) {
        ratio_undefined++;
    }
    for (std::size_t i = 0; i < kMetricCount; i++) {
        if (auto v = metric_value(m, static_cast<MetricId>(i))) {
            histograms[i].add(*v);
        }
    }
}

void HistogramSet::merge(const HistogramSet &other) {
    trials += other.trials;
    ratio_undefined += other.ratio_undefined;
    for (std::size_t i = 0; i < kMetricCount; i++) {
        histograms[i].merge(other.histograms[i]);
    }
}

std::string HistogramSet::csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "bin_low,bin_high";
    for (const char *n : kMetricNames) {
        out << ',' << n;
    }
    out << '\n';
    out << "0," << LogHistogram::kLowEdge;
    for (const auto &h : histograms) {
        out << ',' << h.zero_count();
    }
    out << '\n';
    for (std::size_t b = 0; b < LogHistogram::kLogBins; b++) {
        out << LogHistogram::bin_low(b) << ',' << LogHistogram::bin_high(b);
        for (const auto &h : histograms) {
            out << ',' << h.bin_count(b);
        }
        out << '\n';
    }
    out << LogHistogram::kOneMassEdge << ",1";
    for (const auto &h : histograms) {
        out << ',' << h.one_count();
    }
    out << '\n';
    return out.str();
}

}  // namespace qecdist
