#pragma once

#include "saso/core/types.hpp"

#include <string>
#include <vector>

namespace saso::harness {

// Decimal rendering with 9 significant digits; used everywhere a metric value
// reaches a file so re-runs are byte-identical.
std::string format_value(double value);

// CSV schema: header "tick,value", one row per point, newline-terminated.
std::string metric_csv(const MetricSeries& series);

void write_file(const std::string& path, const std::string& contents);

// One "metric=..., mean=..., min=..., max=..." line per non-empty series.
std::string summary_text(const std::vector<const MetricSeries*>& series);

} // namespace saso::harness
