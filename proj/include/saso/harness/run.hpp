#pragma once

#include "saso/core/types.hpp"
#include "saso/metrics/stability.hpp"
#include "saso/metrics/transferability.hpp"
#include "saso/scenarios/scenario.hpp"

#include <map>
#include <memory>
#include <string>

namespace saso::harness {

// Metric parameters with the per-scenario evaluation defaults baked in:
//   traffic  M = L = 15, epsilon = 2
//   flocking M = L = 10, epsilon = 1
//   life     M = L = 15, epsilon = 0.05
//   usage window 5 and transferability window 40 everywhere.
struct MetricParams {
    metrics::StabilityParams stability;
    int usage_window = 5;
    metrics::TransferabilityParams transfer;
};

MetricParams default_metric_params(const std::string& scenario);
Tick default_ticks(const std::string& scenario); // traffic 1200, flocking / life 1000

struct RunConfig {
    std::string scenario = "traffic";
    std::uint64_t seed = 1;
    Tick ticks = -1;              // -1: scenario default
    std::string output_dir;       // empty: keep results in memory only
    scenarios::ParamMap overrides; // scenario and metric parameters
};

struct RunResult {
    std::string scenario;
    std::uint64_t seed = 0;
    Tick ticks = 0;
    MetricParams metric_params;
    // coherence, stability, variability, global_usage, average_usage (means
    // over parameters), per-parameter usage series when the configuration has
    // more than one entry, transferability.
    std::map<std::string, MetricSeries> series;
    std::string summary;

    const MetricSeries& at(const std::string& name) const;
};

std::unique_ptr<scenarios::Scenario> make_scenario(const std::string& name,
                                                   const scenarios::ParamMap& params,
                                                   std::uint64_t seed);

// Advances the scenario `ticks` steps, streams configurations through every
// metric pipeline and (when output_dir is set) writes one CSV per metric plus
// a summary file.
RunResult run(const RunConfig& config);

} // namespace saso::harness
