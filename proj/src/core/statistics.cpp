#include "saso/core/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace saso {

double MetricSeries::at(Tick tick) const {
    for (const MetricPoint& p : points_)
        if (p.tick == tick) return p.value;
    throw std::out_of_range("MetricSeries::at: no point at tick " + std::to_string(tick));
}

double MetricSeries::mean() const {
    if (points_.empty()) throw std::out_of_range("MetricSeries::mean: empty series");
    double sum = 0.0;
    for (const MetricPoint& p : points_) sum += p.value;
    return sum / static_cast<double>(points_.size());
}

double MetricSeries::min() const {
    if (points_.empty()) throw std::out_of_range("MetricSeries::min: empty series");
    double m = points_.front().value;
    for (const MetricPoint& p : points_) m = std::min(m, p.value);
    return m;
}

double MetricSeries::max() const {
    if (points_.empty()) throw std::out_of_range("MetricSeries::max: empty series");
    double m = points_.front().value;
    for (const MetricPoint& p : points_) m = std::max(m, p.value);
    return m;
}

MeanVariance mean_and_variance(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean_and_variance: empty input");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) {
        const double d = v - mean;
        sq += d * d;
    }
    return {mean, sq / static_cast<double>(values.size())};
}

MeanVariance mean_and_variance(const Eigen::Ref<const Eigen::VectorXd>& values) {
    return mean_and_variance(std::span<const double>(values.data(), static_cast<std::size_t>(values.size())));
}

Histogram make_histogram(std::span<const double> values, int bin_count, double lo, double hi) {
    if (bin_count < 1) throw std::invalid_argument("make_histogram: bin_count must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("make_histogram: requires lo < hi");
    Histogram h;
    h.counts.assign(static_cast<std::size_t>(bin_count), 0);
    const double width = hi - lo;
    for (double v : values) {
        auto bin = static_cast<std::int64_t>(std::floor((v - lo) / width * bin_count));
        bin = std::clamp<std::int64_t>(bin, 0, bin_count - 1);
        ++h.counts[static_cast<std::size_t>(bin)];
    }
    return h;
}

Histogram make_histogram(const Eigen::Ref<const Eigen::VectorXd>& values, int bin_count, double lo, double hi) {
    return make_histogram(std::span<const double>(values.data(), static_cast<std::size_t>(values.size())),
                          bin_count, lo, hi);
}

} // namespace saso
