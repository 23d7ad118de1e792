#pragma once

#include "saso/core/types.hpp"

#include <string>
#include <vector>

namespace saso::harness {

// Which excursions from the baseline band count as peaks. Disturbances push
// most metrics up but push coherence down, so the acceptance checks scan both
// sides; the default matches the plain "spike above baseline" reading.
enum class PeakDirection { Above, Below, Both };

struct TickInterval {
    Tick first = 0;
    Tick last = 0;
    bool contains(Tick t) const { return t >= first && t <= last; }
};

struct PeakReport {
    std::string metric;
    std::vector<Tick> peak_ticks;
    double baseline_mean = 0.0;
    double baseline_std = 0.0;
    double multiplier = 3.0;
    std::vector<TickInterval> expected;
    std::vector<bool> verdicts; // detected iff some peak tick falls inside the window

    bool all_detected() const {
        for (bool v : verdicts)
            if (!v) return false;
        return true;
    }
};

// Flags ticks whose value exceeds baseline_mean + multiplier * baseline_std
// (mirrored below for Below/Both). The baseline is the series restricted to
// [baseline.first, baseline.last]; a degenerate baseline (zero deviation)
// falls back to an absolute threshold of baseline_mean +- 1e-9.
PeakReport detect_peaks(const MetricSeries& series, const TickInterval& baseline,
                        double multiplier, const std::vector<TickInterval>& expected,
                        PeakDirection direction = PeakDirection::Above);

} // namespace saso::harness
