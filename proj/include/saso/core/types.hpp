#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace saso {

using Tick = std::int64_t;

// One agent's control-parameter values at one tick. Entries are unitless
// control parameters; the dimension is fixed per scenario run.
using ConfigurationVector = Eigen::VectorXd;

// Thrown when a sliding window would reach before tick 0, or when a metric is
// queried before enough history has accumulated.
class WarmupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Trailing window of `length` ticks ending at `end`; covers
// [end - length + 1, end]. Only valid when the covered range starts at or
// after tick 0.
struct Window {
    Tick end = 0;
    Tick length = 1;

    Tick begin() const { return end - length + 1; }
    bool valid() const { return length >= 1 && begin() >= 0; }
    bool contains(Tick t) const { return t >= begin() && t <= end; }
};

// Discrete distribution over equal-width bins, kept as integer counts.
struct Histogram {
    std::vector<std::int64_t> counts;

    int bin_count() const { return static_cast<int>(counts.size()); }

    std::int64_t total() const {
        std::int64_t sum = 0;
        for (std::int64_t c : counts) sum += c;
        return sum;
    }

    // Normalised bin probabilities. Requires total() > 0.
    Eigen::VectorXd probabilities() const {
        const double n = static_cast<double>(total());
        if (n <= 0.0) throw std::invalid_argument("Histogram::probabilities: empty histogram");
        Eigen::VectorXd p(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) p[static_cast<Eigen::Index>(i)] = counts[i] / n;
        return p;
    }
};

struct MetricPoint {
    Tick tick = 0;
    double value = 0.0;
};

// Time-indexed scalar outputs of one metric together with the parameters it
// was computed with. Ticks are strictly increasing; the first tick already
// respects the metric's warm-up (callers only append once a value exists).
class MetricSeries {
public:
    MetricSeries() = default;
    explicit MetricSeries(std::string name, std::map<std::string, double> params = {})
        : name_(std::move(name)), params_(std::move(params)) {}

    const std::string& name() const { return name_; }
    const std::map<std::string, double>& params() const { return params_; }
    const std::vector<MetricPoint>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }

    void append(Tick tick, double value) {
        if (!points_.empty() && tick <= points_.back().tick)
            throw std::invalid_argument("MetricSeries::append: ticks must be strictly increasing");
        points_.push_back({tick, value});
    }

    // Value at an exact tick; throws if the tick was never emitted.
    double at(Tick tick) const;

    double mean() const;
    double min() const;
    double max() const;

private:
    std::string name_;
    std::map<std::string, double> params_;
    std::vector<MetricPoint> points_;
};

} // namespace saso
