#pragma once

#include "saso/core/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace saso::metrics {

// Normalised information entropy E = -sum p_i ln p_i / ln(bin_count) of a
// histogram; 0 * ln 0 counts as 0, so E lies in [0, 1]. A single-bin alphabet
// is degenerate and yields 0. Requires a non-empty histogram.
double emergence(const Histogram& histogram);

// Complexity C = 4 E (1 - E); maximal (1) at E = 0.5, zero at both extremes.
double complexity(double emergence_value);

// Pearson correlation coefficient of two equal-length sequences (n >= 2).
// Returns nullopt when either side has zero variance.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

// Equal-width binning recipe for one observable.
struct HistogramSpec {
    int bin_count = 100;
    double lo = 0.0;
    double hi = 1.0;
};

struct TransferabilityParams {
    int window = 40;    // L: correlation window in ticks
    int bin_count = 100; // buckets for continuous observables
};

// Per-tick complexity of one observable, stored densely from first_tick on.
class ComplexitySignal {
public:
    ComplexitySignal() = default;
    ComplexitySignal(std::string source, Tick first_tick)
        : source_(std::move(source)), first_tick_(first_tick) {}

    const std::string& source() const { return source_; }
    Tick first_tick() const { return first_tick_; }
    Tick last_tick() const { return first_tick_ + static_cast<Tick>(values_.size()) - 1; }
    bool empty() const { return values_.empty(); }

    void append(double complexity_value);
    double at(Tick tick) const;

    // Window contents in tick order; throws WarmupError if not covered.
    std::vector<double> window(Tick end, int length) const;

private:
    std::string source_;
    Tick first_tick_ = 0;
    std::vector<double> values_;
};

// Complexity of one tick's samples: histogram -> emergence -> complexity.
double complexity_of_samples(std::span<const double> samples, const HistogramSpec& spec);

// Full pipeline over a per-tick sample stream.
ComplexitySignal complexity_signal(const std::vector<std::vector<double>>& per_tick_samples,
                                   Tick first_tick, const HistogramSpec& spec,
                                   std::string source = "observable");

// Transferability T = 1 - |corr| of the system- and environment-complexity
// windows ending at `tick`. When either window is constant the correlation is
// undefined and T is 1: a constant-complexity signal is maximally decoupled
// from the other side's variation.
double transferability(const ComplexitySignal& system, const ComplexitySignal& environment,
                       Tick tick, const TransferabilityParams& params);

} // namespace saso::metrics
