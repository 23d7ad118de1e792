#include "saso/metrics/adaptation.hpp"

#include <limits>
#include <stdexcept>

namespace saso::metrics {

namespace {

void check_bounds(const UsageBounds& bounds, Eigen::Index parameter, Eigen::Index dimension) {
    if (bounds.lower.size() != dimension || bounds.upper.size() != dimension)
        throw std::invalid_argument("UsageBounds: one bound pair per configuration entry required");
    if (parameter < 0 || parameter >= dimension)
        throw std::invalid_argument("parameter usage: parameter index out of range");
    if (!(bounds.upper[parameter] > bounds.lower[parameter]))
        throw std::invalid_argument("UsageBounds: upper must exceed lower");
}

Window usage_window(Tick tick, int window) {
    if (window < 1) throw std::invalid_argument("parameter usage: window must be >= 1");
    // Usage windows run from t - L to t inclusive.
    return Window{tick, static_cast<Tick>(window) + 1};
}

} // namespace

double configuration_coherence(const Eigen::Ref<const Eigen::MatrixXd>& vectors) {
    if (vectors.cols() < 1)
        throw std::invalid_argument("configuration_coherence: needs at least one vector");
    const Eigen::VectorXd centroid = vectors.rowwise().mean();
    const double variance =
        (vectors.colwise() - centroid).colwise().squaredNorm().mean();
    return 1.0 / (1.0 + variance);
}

UsageValue global_parameter_usage(const ConfigurationSeries& series, Eigen::Index parameter,
                                  Tick tick, int window, const UsageBounds& bounds) {
    check_bounds(bounds, parameter, series.dimension());
    const Window w = usage_window(tick, window);
    if (!w.valid()) throw WarmupError("global_parameter_usage: window extends before tick 0");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Tick t = w.begin(); t <= w.end; ++t) {
        const auto& population = series.population_at(t);
        lo = std::min(lo, population.row(parameter).minCoeff());
        hi = std::max(hi, population.row(parameter).maxCoeff());
    }
    UsageValue result;
    result.value = (hi - lo) / (bounds.upper[parameter] - bounds.lower[parameter]);
    result.out_of_bounds = lo < bounds.lower[parameter] || hi > bounds.upper[parameter];
    return result;
}

UsageValue average_parameter_usage(const ConfigurationSeries& series, Eigen::Index parameter,
                                   Tick tick, int window, const UsageBounds& bounds) {
    check_bounds(bounds, parameter, series.dimension());
    const Window w = usage_window(tick, window);
    if (!w.valid()) throw WarmupError("average_parameter_usage: window extends before tick 0");

    const double possible = bounds.upper[parameter] - bounds.lower[parameter];
    double range_sum = 0.0;
    bool out_of_bounds = false;
    for (std::size_t agent = 0; agent < series.agent_count(); ++agent) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (Tick t = w.begin(); t <= w.end; ++t) {
            const double v = series.population_at(t)(parameter, static_cast<Eigen::Index>(agent));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        range_sum += hi - lo;
        out_of_bounds = out_of_bounds || lo < bounds.lower[parameter] || hi > bounds.upper[parameter];
    }
    return {range_sum / (possible * static_cast<double>(series.agent_count())), out_of_bounds};
}

} // namespace saso::metrics
