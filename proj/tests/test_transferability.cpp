#include "saso/core/statistics.hpp"
#include "saso/metrics/transferability.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace saso;
using metrics::ComplexitySignal;

TEST_CASE("emergence of canonical histograms") {
    CHECK(metrics::emergence(Histogram{{3, 3, 3, 3, 3}}) == doctest::Approx(1.0));
    CHECK(metrics::emergence(Histogram{{0, 7, 0}}) == 0.0);

    // -(0.9 log2 0.9 + 0.1 log2 0.1) computed by hand.
    CHECK(metrics::emergence(Histogram{{9, 1}}) == doctest::Approx(0.46899559358928122).epsilon(1e-12));

    CHECK_THROWS_AS((void)metrics::emergence(Histogram{{0, 0}}), std::invalid_argument);
    CHECK(metrics::emergence(Histogram{{5}}) == 0.0); // degenerate one-bin alphabet
}

TEST_CASE("emergence is permutation invariant and base independent") {
    const Histogram a{{6, 3, 1, 0}};
    const Histogram b{{0, 1, 6, 3}};
    CHECK(metrics::emergence(a) == doctest::Approx(metrics::emergence(b)).epsilon(1e-15));
    CHECK(metrics::emergence(a) > 0.0);
    CHECK(metrics::emergence(a) < 1.0);
}

TEST_CASE("complexity parabola") {
    CHECK(metrics::complexity(0.0) == 0.0);
    CHECK(metrics::complexity(1.0) == 0.0);
    CHECK(metrics::complexity(0.5) == 1.0);
    CHECK(metrics::complexity(0.25) == doctest::Approx(0.75));
    CHECK(metrics::complexity(0.25) == doctest::Approx(metrics::complexity(0.75))); // symmetry
    CHECK_THROWS_AS((void)metrics::complexity(-0.01), std::invalid_argument);
    CHECK_THROWS_AS((void)metrics::complexity(1.01), std::invalid_argument);
}

TEST_CASE("pearson correlation basics") {
    const std::vector<double> x = {1.0, 2.0, 4.0, 8.0};
    std::vector<double> y = x;
    CHECK(*metrics::pearson(x, y) == doctest::Approx(1.0));
    for (double& v : y) v = -2.0 * v + 3.0;
    CHECK(*metrics::pearson(x, y) == doctest::Approx(-1.0));
    CHECK_FALSE(metrics::pearson(std::vector<double>{3.0, 3.0, 3.0}, std::vector<double>{1.0, 2.0, 3.0}).has_value());
    CHECK_THROWS_AS((void)metrics::pearson(x, std::vector<double>{1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)metrics::pearson(std::vector<double>{1.0}, std::vector<double>{1.0}),
                    std::invalid_argument);
}

TEST_CASE("transferability of mirrored and constant windows") {
    ComplexitySignal system("system", 0);
    ComplexitySignal environment("environment", 0);
    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        const double v = rng.uniform(0.0, 1.0);
        system.append(v);
        environment.append(v);
    }
    CHECK(metrics::transferability(system, environment, 39, {40, 100}) == doctest::Approx(0.0));

    ComplexitySignal constant("system", 0);
    for (int t = 0; t < 40; ++t) constant.append(0.4);
    CHECK(metrics::transferability(constant, environment, 39, {40, 100}) == 1.0);
    CHECK_THROWS_AS((void)metrics::transferability(system, environment, 20, {40, 100}), WarmupError);
    CHECK_THROWS_AS((void)metrics::transferability(system, environment, 39, {2, 100}),
                    std::invalid_argument);
}

TEST_CASE("independent windows concentrate T near 1") {
    // Monte-Carlo oracle: the exact null distribution of the correlation at
    // n = 40 puts about 94% of its mass below |c| = 0.3.
    Rng rng(4242);
    int high = 0;
    const int trials = 2000;
    for (int trial = 0; trial < trials; ++trial) {
        ComplexitySignal system("system", 0);
        ComplexitySignal environment("environment", 0);
        for (int t = 0; t < 40; ++t) {
            system.append(rng.uniform(0.0, 1.0));
            environment.append(rng.uniform(0.0, 1.0));
        }
        if (metrics::transferability(system, environment, 39, {40, 100}) > 0.7) ++high;
    }
    CHECK(high >= static_cast<int>(0.92 * trials));
}

TEST_CASE("T lies in [0,1] and is invariant under affine rescaling of both windows") {
    Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        ComplexitySignal system("system", 0);
        ComplexitySignal environment("environment", 0);
        std::vector<double> xs;
        std::vector<double> ys;
        for (int t = 0; t < 12; ++t) {
            xs.push_back(rng.uniform(0.0, 1.0));
            ys.push_back(0.5 * xs.back() + rng.uniform(0.0, 0.4));
            system.append(xs.back());
            environment.append(ys.back());
        }
        const double t_plain = metrics::transferability(system, environment, 11, {12, 100});
        CHECK(t_plain >= 0.0);
        CHECK(t_plain <= 1.0);

        const double scale = rng.uniform(0.1, 3.0);
        const double shift = rng.uniform(-2.0, 2.0);
        ComplexitySignal scaled_system("system", 0);
        ComplexitySignal scaled_environment("environment", 0);
        for (int t = 0; t < 12; ++t) {
            scaled_system.append(scale * xs[static_cast<std::size_t>(t)] + shift);
            scaled_environment.append(scale * ys[static_cast<std::size_t>(t)] + shift);
        }
        CHECK(metrics::transferability(scaled_system, scaled_environment, 11, {12, 100}) ==
              doctest::Approx(t_plain).epsilon(1e-9));
    }
}

TEST_CASE("complexity signal pipeline") {
    const metrics::HistogramSpec spec{4, 0.0, 4.0};
    const ComplexitySignal flat = metrics::complexity_signal({{1.0, 1.0}, {2.5, 2.5}}, 0, spec);
    CHECK(flat.at(0) == 0.0);
    CHECK(flat.at(1) == 0.0);

    const ComplexitySignal uniform = metrics::complexity_signal({{0.5, 1.5, 2.5, 3.5}}, 0, spec);
    CHECK(uniform.at(0) == doctest::Approx(0.0)); // E = 1 so C = 0

    // Bisection oracle: find p with normalised binary entropy 0.5, then split
    // a two-bin histogram at that ratio.
    auto entropy = [](double p) {
        return -(p * std::log(p) + (1.0 - p) * std::log(1.0 - p)) / std::log(2.0);
    };
    double lo = 1e-12;
    double hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (entropy(mid) < 0.5 ? lo : hi) = mid;
    }
    const double p_star = 0.5 * (lo + hi);
    CHECK(p_star == doctest::Approx(0.110027).epsilon(1e-4));

    const int total = 200000;
    const int ones = static_cast<int>(std::round(p_star * total));
    std::vector<double> samples(static_cast<std::size_t>(total), 0.25);
    for (int i = 0; i < ones; ++i) samples[static_cast<std::size_t>(i)] = 0.75;
    CHECK(metrics::complexity_of_samples(samples, {2, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS((void)metrics::complexity_signal({{}}, 0, spec), std::invalid_argument);
}

TEST_CASE("complexity signal window access") {
    ComplexitySignal signal("system", 5);
    for (int i = 0; i < 10; ++i) signal.append(0.25 * i);
    CHECK(signal.first_tick() == 5);
    CHECK(signal.last_tick() == 14);
    CHECK(signal.at(7) == 0.5);
    const auto window = signal.window(14, 3);
    CHECK(window == std::vector<double>{1.75, 2.0, 2.25});
    CHECK_THROWS_AS((void)signal.window(4, 1), WarmupError);
    CHECK_THROWS_AS((void)signal.at(15), std::out_of_range);
}
