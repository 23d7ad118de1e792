#include "saso/core/configuration_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace saso {

ConfigurationSeries::ConfigurationSeries(Eigen::Index dimension, std::size_t agent_count)
    : dimension_(dimension), agent_count_(agent_count) {
    if (dimension < 1) throw std::invalid_argument("ConfigurationSeries: dimension must be >= 1");
    if (agent_count < 1) throw std::invalid_argument("ConfigurationSeries: agent_count must be >= 1");
    pending_.setZero(dimension_, static_cast<Eigen::Index>(agent_count_));
    pending_filled_.assign(agent_count_, false);
}

void ConfigurationSeries::record(Tick tick, std::size_t agent,
                                 const Eigen::Ref<const ConfigurationVector>& value) {
    if (agent >= agent_count_)
        throw std::invalid_argument("ConfigurationSeries::record: unknown agent " + std::to_string(agent));
    if (value.size() != dimension_)
        throw std::invalid_argument("ConfigurationSeries::record: dimension mismatch");
    if (!value.allFinite())
        throw std::invalid_argument("ConfigurationSeries::record: non-finite entry");
    if (tick != horizon() + 1)
        throw std::invalid_argument(tick >= 0 && tick <= horizon()
            ? "ConfigurationSeries::record: duplicate (tick, agent) sample"
            : "ConfigurationSeries::record: ticks must be recorded consecutively");
    if (pending_filled_[agent])
        throw std::invalid_argument("ConfigurationSeries::record: duplicate (tick, agent) sample");

    pending_.col(static_cast<Eigen::Index>(agent)) = value;
    pending_filled_[agent] = true;
    ++pending_count_;
    if (pending_count_ == agent_count_) {
        sealed_.push_back(pending_);
        pending_filled_.assign(agent_count_, false);
        pending_count_ = 0;
    }
}

const Eigen::MatrixXd& ConfigurationSeries::population_at(Tick tick) const {
    if (tick < 0 || tick > horizon())
        throw std::out_of_range("ConfigurationSeries::population_at: tick not sealed");
    return sealed_[static_cast<std::size_t>(tick)];
}

ConfigurationVector ConfigurationSeries::value_at(Tick tick, std::size_t agent) const {
    if (agent >= agent_count_)
        throw std::invalid_argument("ConfigurationSeries::value_at: unknown agent");
    return population_at(tick).col(static_cast<Eigen::Index>(agent));
}

void ConfigurationSeries::check_window(const Window& window) const {
    if (window.length < 1)
        throw std::invalid_argument("ConfigurationSeries::slice: window length must be >= 1");
    if (window.begin() < 0)
        throw WarmupError("ConfigurationSeries::slice: window extends before tick 0");
    if (window.end > horizon())
        throw std::out_of_range("ConfigurationSeries::slice: window end past horizon");
}

Eigen::MatrixXd ConfigurationSeries::slice(const Window& window, std::size_t agent) const {
    check_window(window);
    if (agent >= agent_count_)
        throw std::invalid_argument("ConfigurationSeries::slice: unknown agent");
    Eigen::MatrixXd out(dimension_, window.length);
    for (Tick t = window.begin(); t <= window.end; ++t)
        out.col(t - window.begin()) = sealed_[static_cast<std::size_t>(t)].col(static_cast<Eigen::Index>(agent));
    return out;
}

Eigen::MatrixXd ConfigurationSeries::slice(const Window& window) const {
    check_window(window);
    const auto n = static_cast<Eigen::Index>(agent_count_);
    Eigen::MatrixXd out(dimension_, window.length * n);
    for (Tick t = window.begin(); t <= window.end; ++t)
        out.middleCols((t - window.begin()) * n, n) = sealed_[static_cast<std::size_t>(t)];
    return out;
}

} // namespace saso
