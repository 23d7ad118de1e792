#include "saso/metrics/transferability.hpp"

#include "saso/core/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace saso::metrics {

double emergence(const Histogram& histogram) {
    const double total = static_cast<double>(histogram.total());
    if (total <= 0.0) throw std::invalid_argument("emergence: empty histogram");
    if (histogram.bin_count() < 1) throw std::invalid_argument("emergence: needs at least one bin");
    if (histogram.bin_count() == 1) return 0.0; // degenerate alphabet

    double entropy = 0.0;
    for (std::int64_t count : histogram.counts) {
        if (count <= 0) continue; // 0 * ln 0 := 0
        const double p = static_cast<double>(count) / total;
        entropy -= p * std::log(p);
    }
    return entropy / std::log(static_cast<double>(histogram.bin_count()));
}

double complexity(double emergence_value) {
    if (emergence_value < 0.0 || emergence_value > 1.0)
        throw std::invalid_argument("complexity: emergence must lie in [0, 1]");
    return 4.0 * emergence_value * (1.0 - emergence_value);
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
    if (x.size() < 2) throw std::invalid_argument("pearson: needs at least two points");

    // A window of identical values has no variance in the intended sense even
    // when accumulated rounding would make the sum of squares a denormal.
    bool x_constant = true;
    bool y_constant = true;
    for (std::size_t i = 1; i < x.size(); ++i) {
        x_constant = x_constant && x[i] == x[0];
        y_constant = y_constant && y[i] == y[0];
    }
    if (x_constant || y_constant) return std::nullopt;

    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;

    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;
    const double c = sxy / std::sqrt(sxx * syy);
    return std::clamp(c, -1.0, 1.0);
}

void ComplexitySignal::append(double complexity_value) {
    values_.push_back(complexity_value);
}

double ComplexitySignal::at(Tick tick) const {
    if (values_.empty() || tick < first_tick_ || tick > last_tick())
        throw std::out_of_range("ComplexitySignal::at: tick not covered");
    return values_[static_cast<std::size_t>(tick - first_tick_)];
}

std::vector<double> ComplexitySignal::window(Tick end, int length) const {
    if (length < 1) throw std::invalid_argument("ComplexitySignal::window: length must be >= 1");
    const Tick begin = end - length + 1;
    if (values_.empty() || begin < first_tick_ || end > last_tick())
        throw WarmupError("ComplexitySignal::window: signal does not cover the window");
    std::vector<double> out(static_cast<std::size_t>(length));
    for (Tick t = begin; t <= end; ++t)
        out[static_cast<std::size_t>(t - begin)] = values_[static_cast<std::size_t>(t - first_tick_)];
    return out;
}

double complexity_of_samples(std::span<const double> samples, const HistogramSpec& spec) {
    if (samples.empty())
        throw std::invalid_argument("complexity_of_samples: needs at least one sample per tick");
    const Histogram h = make_histogram(samples, spec.bin_count, spec.lo, spec.hi);
    return complexity(emergence(h));
}

ComplexitySignal complexity_signal(const std::vector<std::vector<double>>& per_tick_samples,
                                   Tick first_tick, const HistogramSpec& spec, std::string source) {
    ComplexitySignal signal(std::move(source), first_tick);
    for (const auto& samples : per_tick_samples)
        signal.append(complexity_of_samples(samples, spec));
    return signal;
}

double transferability(const ComplexitySignal& system, const ComplexitySignal& environment,
                       Tick tick, const TransferabilityParams& params) {
    if (params.window < 3)
        throw std::invalid_argument("transferability: window must be >= 3");
    const std::vector<double> xs = system.window(tick, params.window);
    const std::vector<double> ys = environment.window(tick, params.window);
    const std::optional<double> c = pearson(xs, ys);
    if (!c.has_value()) return 1.0; // constant window: maximally decoupled
    return 1.0 - std::abs(*c);
}

} // namespace saso::metrics
