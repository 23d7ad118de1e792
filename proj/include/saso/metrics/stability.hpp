#pragma once

#include "saso/core/configuration_series.hpp"
#include "saso/core/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>

namespace saso::metrics {

struct StabilityParams {
    int fluctuation_window = 15;  // M: ticks of activity history per fluctuation
    int density_window = 15;      // L: ticks per density window
    double epsilon = 2.0;         // KL-divergence activity threshold
    double bandwidth_floor = 1e-3;
};

// Affine-rescaled fraction of active agents: z = (2 n - N + 1) / (2 N).
double activity_factor(int active_count, int total_agents);

// First tick at which an agent's activity is decidable: both the current
// density window [t-L+1, t] and the previous one [t-2L+1, t-L] must be full.
Tick activity_warmup(const StabilityParams& params);

// First tick at which the stability value nu_t exists: M fluctuations, each
// needing M activity factors, each needing 2L ticks of density data.
Tick stability_warmup(const StabilityParams& params);

// True iff the agent's configuration density over the current window differs
// from the previous window by more than epsilon (KL divergence).
bool is_active(const ConfigurationSeries& series, std::size_t agent, Tick tick,
               const StabilityParams& params);

// Number of active agents at `tick`.
int active_agent_count(const ConfigurationSeries& series, Tick tick, const StabilityParams& params);

// Variance of the fluctuation xi over the last M ticks, computed from the
// 2M-1 most recent activity factors (tick order, last entry = z_t):
//   xi_t  = z_t - (1/M) sum_{i=0..M-1} z_{t-i}
//   nu_t  = (1/M) sum xi^2_{t-i} - ((1/M) sum xi_{t-i})^2
double fluctuation_variance(std::span<const double> activity_factors, int fluctuation_window);

// nu_t computed directly from the series; throws WarmupError before
// stability_warmup(params).
double configuration_stability(const ConfigurationSeries& series, Tick tick,
                               const StabilityParams& params);

// Incremental per-tick evaluator used by the harness. Feeding every sealed
// tick in order yields exactly the values of configuration_stability() while
// caching activity factors and memoising KL divergences (windows repeat a lot
// when configurations are quantised or piecewise constant).
class StabilityPipeline {
public:
    StabilityPipeline(std::size_t agent_count, StabilityParams params);

    // Call once per sealed tick, in tick order starting at 0. Returns nu_t
    // once past warm-up.
    std::optional<double> on_tick(const ConfigurationSeries& series, Tick tick);

    const StabilityParams& params() const { return params_; }

private:
    double memoised_kl(const ConfigurationSeries& series, std::size_t agent, Tick tick);

    StabilityParams params_;
    std::size_t agent_count_;
    Tick next_tick_ = 0;
    std::vector<double> activity_; // activity_[i] = z at tick activity_warmup + i
    std::unordered_map<std::string, double> kl_memo_;
    // Scratch buffers so the per-agent hot path does not allocate.
    std::vector<double> current_window_;
    std::vector<double> previous_window_;
    std::vector<int> column_order_;
    std::string key_;
};

} // namespace saso::metrics
