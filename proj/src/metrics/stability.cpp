#include "saso/metrics/stability.hpp"

#include "saso/metrics/kernel_density.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace saso::metrics {

namespace {

void check_params(const StabilityParams& params) {
    if (params.fluctuation_window < 2)
        throw std::invalid_argument("StabilityParams: fluctuation window M must be >= 2");
    if (params.density_window < 2)
        throw std::invalid_argument("StabilityParams: density window L must be >= 2");
    if (!(params.epsilon > 0.0))
        throw std::invalid_argument("StabilityParams: epsilon must be > 0");
}

double window_kl(const ConfigurationSeries& series, std::size_t agent, Tick tick,
                 const StabilityParams& params) {
    const Tick l = params.density_window;
    const Eigen::MatrixXd current = series.slice(Window{tick, l}, agent);
    const Eigen::MatrixXd previous = series.slice(Window{tick - l, l}, agent);
    const ParzenDensity p = ParzenDensity::from_samples(current, params.bandwidth_floor);
    const ParzenDensity q = ParzenDensity::from_samples(previous, params.bandwidth_floor);
    return kl_divergence(p, q);
}

} // namespace

double activity_factor(int active_count, int total_agents) {
    if (total_agents < 1)
        throw std::invalid_argument("activity_factor: needs at least one agent");
    if (active_count < 0 || active_count > total_agents)
        throw std::invalid_argument("activity_factor: active count out of range");
    return (2.0 * active_count - total_agents + 1.0) / (2.0 * total_agents);
}

Tick activity_warmup(const StabilityParams& params) {
    return 2 * static_cast<Tick>(params.density_window) - 1;
}

Tick stability_warmup(const StabilityParams& params) {
    return activity_warmup(params) + 2 * (static_cast<Tick>(params.fluctuation_window) - 1);
}

bool is_active(const ConfigurationSeries& series, std::size_t agent, Tick tick,
               const StabilityParams& params) {
    check_params(params);
    if (tick < activity_warmup(params))
        throw WarmupError("is_active: density windows not yet full");
    return window_kl(series, agent, tick, params) > params.epsilon;
}

int active_agent_count(const ConfigurationSeries& series, Tick tick, const StabilityParams& params) {
    int n = 0;
    for (std::size_t agent = 0; agent < series.agent_count(); ++agent)
        if (is_active(series, agent, tick, params)) ++n;
    return n;
}

double fluctuation_variance(std::span<const double> activity_factors, int fluctuation_window) {
    const int m = fluctuation_window;
    if (m < 2) throw std::invalid_argument("fluctuation_variance: window must be >= 2");
    if (activity_factors.size() != static_cast<std::size_t>(2 * m - 1))
        throw std::invalid_argument("fluctuation_variance: expects 2M-1 activity factors");

    // activity_factors[i] corresponds to tick t - (2M - 2) + i; fluctuations
    // exist for the last M entries.
    std::vector<double> xi(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const std::size_t end = static_cast<std::size_t>(m - 1 + i);
        double window_sum = 0.0;
        for (int back = 0; back < m; ++back) window_sum += activity_factors[end - static_cast<std::size_t>(back)];
        xi[static_cast<std::size_t>(i)] = activity_factors[end] - window_sum / m;
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    for (double x : xi) {
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / m;
    return std::max(0.0, sum_sq / m - mean * mean);
}

double configuration_stability(const ConfigurationSeries& series, Tick tick,
                               const StabilityParams& params) {
    check_params(params);
    if (tick < stability_warmup(params))
        throw WarmupError("configuration_stability: not enough history");
    const int m = params.fluctuation_window;
    std::vector<double> z(static_cast<std::size_t>(2 * m - 1));
    const Tick first = tick - (2 * static_cast<Tick>(m) - 2);
    for (Tick t = first; t <= tick; ++t) {
        const int n = active_agent_count(series, t, params);
        z[static_cast<std::size_t>(t - first)] =
            activity_factor(n, static_cast<int>(series.agent_count()));
    }
    return fluctuation_variance(z, m);
}

StabilityPipeline::StabilityPipeline(std::size_t agent_count, StabilityParams params)
    : params_(params), agent_count_(agent_count) {
    check_params(params_);
}

double StabilityPipeline::memoised_kl(const ConfigurationSeries& series, std::size_t agent, Tick tick) {
    const int l = params_.density_window;
    const Eigen::Index dim = series.dimension();
    const auto column = static_cast<Eigen::Index>(agent);

    current_window_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(l));
    previous_window_.resize(current_window_.size());
    for (int i = 0; i < l; ++i)
        for (Eigen::Index r = 0; r < dim; ++r) {
            const std::size_t slot = static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                                     static_cast<std::size_t>(r);
            current_window_[slot] = series.population_at(tick - l + 1 + i)(r, column);
            previous_window_[slot] = series.population_at(tick - 2 * l + 1 + i)(r, column);
        }

    // Identical windows have identical densities; skip the estimator (and the
    // memo) entirely. Settled agents hit this almost every tick.
    if (current_window_ == previous_window_) return 0.0;

    // Canonical key: the samples of each window sorted lexicographically (the
    // KDE and the KL estimator are invariant under sample permutation).
    key_.clear();
    auto append_sorted = [this, dim, l](const std::vector<double>& window) {
        column_order_.resize(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) column_order_[static_cast<std::size_t>(i)] = i;
        std::sort(column_order_.begin(), column_order_.end(), [&](int a, int b) {
            const double* lhs = window.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(dim);
            const double* rhs = window.data() + static_cast<std::size_t>(b) * static_cast<std::size_t>(dim);
            for (Eigen::Index r = 0; r < dim; ++r) {
                if (lhs[r] < rhs[r]) return true;
                if (lhs[r] > rhs[r]) return false;
            }
            return false;
        });
        for (int index : column_order_)
            key_.append(reinterpret_cast<const char*>(window.data() +
                                                      static_cast<std::size_t>(index) * static_cast<std::size_t>(dim)),
                        sizeof(double) * static_cast<std::size_t>(dim));
    };
    append_sorted(current_window_);
    append_sorted(previous_window_);

    if (auto it = kl_memo_.find(key_); it != kl_memo_.end()) return it->second;

    const auto as_matrix = [dim, l](const std::vector<double>& window) {
        return Eigen::Map<const Eigen::MatrixXd>(window.data(), dim, l);
    };
    const ParzenDensity p = ParzenDensity::from_samples(as_matrix(current_window_), params_.bandwidth_floor);
    const ParzenDensity q = ParzenDensity::from_samples(as_matrix(previous_window_), params_.bandwidth_floor);
    const double kl = kl_divergence(p, q);
    kl_memo_.emplace(key_, kl);
    return kl;
}

std::optional<double> StabilityPipeline::on_tick(const ConfigurationSeries& series, Tick tick) {
    if (tick != next_tick_)
        throw std::invalid_argument("StabilityPipeline::on_tick: ticks must be fed consecutively from 0");
    if (series.agent_count() != agent_count_)
        throw std::invalid_argument("StabilityPipeline::on_tick: agent count mismatch");
    ++next_tick_;

    if (tick < activity_warmup(params_)) return std::nullopt;

    int n = 0;
    for (std::size_t agent = 0; agent < agent_count_; ++agent)
        if (memoised_kl(series, agent, tick) > params_.epsilon) ++n;
    activity_.push_back(activity_factor(n, static_cast<int>(agent_count_)));

    const int m = params_.fluctuation_window;
    if (tick < stability_warmup(params_)) return std::nullopt;
    const std::size_t need = static_cast<std::size_t>(2 * m - 1);
    const std::span<const double> recent(activity_.data() + activity_.size() - need, need);
    return fluctuation_variance(recent, m);
}

} // namespace saso::metrics
