#pragma once

#include "saso/core/types.hpp"

#include <Eigen/Dense>

#include <random>
#include <span>

namespace saso {

struct MeanVariance {
    double mean = 0.0;
    double variance = 0.0; // population form (divisor N)
};

// Mean and population variance of a non-empty sequence.
MeanVariance mean_and_variance(std::span<const double> values);
MeanVariance mean_and_variance(const Eigen::Ref<const Eigen::VectorXd>& values);

// Bin `values` into `bin_count` equal-width bins over [lo, hi). A value v
// maps to bin floor((v - lo) / (hi - lo) * bin_count); values at or above hi
// clamp into the top bin, values below lo into bin 0. Empty input yields a
// histogram with total 0.
Histogram make_histogram(std::span<const double> values, int bin_count, double lo, double hi);
Histogram make_histogram(const Eigen::Ref<const Eigen::VectorXd>& values, int bin_count, double lo, double hi);

// Deterministic seeded random source used by the scenarios. Thin wrapper over
// std::mt19937_64 with explicit draw arithmetic so that streams are identical
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    bool bernoulli(double p) { return uniform(0.0, 1.0) < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace saso
