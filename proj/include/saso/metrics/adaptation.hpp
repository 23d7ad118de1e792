#pragma once

#include "saso/core/configuration_series.hpp"
#include "saso/core/types.hpp"

#include <Eigen/Dense>

namespace saso::metrics {

// Configuration coherence c_conf = 1 / (1 + v_S) where v_S is the population
// variance of the configuration vectors: v_S = (1/|S|) sum ||x_s - mean||^2.
// Lies in (0, 1] and equals 1 iff all vectors are identical.
double configuration_coherence(const Eigen::Ref<const Eigen::MatrixXd>& vectors);

// Design-time possible range per configuration entry; upper > lower holds
// elementwise so every V_j = upper_j - lower_j is positive.
struct UsageBounds {
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
};

// Usage results carry a flag instead of failing when an observed value falls
// outside the declared bounds; that signals misconfigured bounds upstream
// while the quotient stays informative.
struct UsageValue {
    double value = 0.0;
    bool out_of_bounds = false;
};

// First tick at which a usage value over [t - L, t] exists.
inline Tick usage_warmup(int window) { return window; }

// Global parameter usage U_{j,g}: range of entry j taken by any agent during
// [tick - window, tick], divided by the possible range V_j.
UsageValue global_parameter_usage(const ConfigurationSeries& series, Eigen::Index parameter,
                                  Tick tick, int window, const UsageBounds& bounds);

// Average parameter usage U_{j,a}: mean over agents of each agent's own range
// of entry j during [tick - window, tick], divided by V_j.
UsageValue average_parameter_usage(const ConfigurationSeries& series, Eigen::Index parameter,
                                   Tick tick, int window, const UsageBounds& bounds);

} // namespace saso::metrics
