#include "saso/harness/peaks.hpp"

#include "saso/core/statistics.hpp"

#include <cmath>
#include <stdexcept>

namespace saso::harness {

PeakReport detect_peaks(const MetricSeries& series, const TickInterval& baseline,
                        double multiplier, const std::vector<TickInterval>& expected,
                        PeakDirection direction) {
    std::vector<double> base_values;
    for (const MetricPoint& p : series.points())
        if (baseline.contains(p.tick)) base_values.push_back(p.value);
    if (base_values.empty())
        throw std::invalid_argument("detect_peaks: baseline window holds no points");

    const MeanVariance stats = mean_and_variance(base_values);
    const double deviation = std::sqrt(stats.variance);

    PeakReport report;
    report.metric = series.name();
    report.baseline_mean = stats.mean;
    report.baseline_std = deviation;
    report.multiplier = multiplier;
    report.expected = expected;

    const double margin = deviation > 0.0 ? multiplier * deviation : 1e-9;
    const double upper = stats.mean + margin;
    const double lower = stats.mean - margin;
    for (const MetricPoint& p : series.points()) {
        const bool above = p.value > upper;
        const bool below = p.value < lower;
        const bool peak = direction == PeakDirection::Above   ? above
                          : direction == PeakDirection::Below ? below
                                                              : (above || below);
        if (peak) report.peak_ticks.push_back(p.tick);
    }

    report.verdicts.reserve(expected.size());
    for (const TickInterval& window : expected) {
        bool detected = false;
        for (Tick t : report.peak_ticks)
            if (window.contains(t)) {
                detected = true;
                break;
            }
        report.verdicts.push_back(detected);
    }
    return report;
}

} // namespace saso::harness
