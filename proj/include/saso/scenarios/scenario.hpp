#pragma once

#include "saso/core/types.hpp"
#include "saso/metrics/adaptation.hpp"
#include "saso/metrics/transferability.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace saso::scenarios {

using ParamMap = std::map<std::string, double>;

// Uniform contract the harness drives: a deterministic seeded world advancing
// in discrete ticks, exposing per-agent configuration vectors plus one system
// and one environment observable stream per tick.
class Scenario {
public:
    virtual ~Scenario() = default;

    virtual std::string name() const = 0;
    virtual std::size_t agent_count() const = 0;
    virtual Eigen::Index configuration_dimension() const = 0;
    virtual metrics::UsageBounds usage_bounds() const = 0;

    virtual Tick tick() const = 0;
    virtual void step() = 0;

    // One column per agent, evaluated at the current tick.
    virtual Eigen::MatrixXd configurations() const = 0;

    virtual std::vector<double> system_observation() const = 0;
    virtual std::vector<double> environment_observation() const = 0;

    virtual metrics::HistogramSpec system_histogram() const = 0;
    virtual metrics::HistogramSpec environment_histogram() const = 0;

    // First tick at which the observations exist. Self-contained scenarios
    // use the previous tick's state as environment, so theirs start at 1.
    virtual Tick environment_start() const { return 0; }
    virtual Tick system_start() const { return 0; }
};

// Reads a parameter with a default, tracking consumed keys so callers can
// reject typos.
class ParamReader {
public:
    explicit ParamReader(const ParamMap& params) : params_(params) {}

    double get(const std::string& key, double fallback) {
        consumed_.push_back(key);
        auto it = params_.find(key);
        return it == params_.end() ? fallback : it->second;
    }

    int get_int(const std::string& key, int fallback) {
        return static_cast<int>(get(key, fallback));
    }

    // Throws if the map holds keys never consumed by the scenario.
    void reject_unknown() const {
        for (const auto& [key, value] : params_) {
            (void)value;
            if (std::find(consumed_.begin(), consumed_.end(), key) == consumed_.end())
                throw std::invalid_argument("unknown parameter: " + key);
        }
    }

private:
    const ParamMap& params_;
    std::vector<std::string> consumed_;
};

} // namespace saso::scenarios
