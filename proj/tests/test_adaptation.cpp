#include "saso/core/statistics.hpp"
#include "saso/metrics/adaptation.hpp"

#include <doctest.h>

#include <vector>

using namespace saso;
using metrics::UsageBounds;

namespace {
ConfigurationSeries series_1d(const std::vector<std::vector<double>>& per_tick_agent_values) {
    const auto agents = per_tick_agent_values.front().size();
    ConfigurationSeries s(1, agents);
    for (std::size_t t = 0; t < per_tick_agent_values.size(); ++t)
        for (std::size_t a = 0; a < agents; ++a)
            s.record(static_cast<Tick>(t), a, Eigen::VectorXd::Constant(1, per_tick_agent_values[t][a]));
    return s;
}

UsageBounds bounds_1d(double lo, double hi) {
    UsageBounds b;
    b.lower = Eigen::VectorXd::Constant(1, lo);
    b.upper = Eigen::VectorXd::Constant(1, hi);
    return b;
}
} // namespace

TEST_CASE("coherence of identical vectors is exactly one") {
    Eigen::MatrixXd same(3, 5);
    same.colwise() = Eigen::Vector3d(0.5, -2.0, 7.0);
    CHECK(metrics::configuration_coherence(same) == 1.0);
}

TEST_CASE("coherence hand case and monotonicity") {
    Eigen::MatrixXd pair(1, 2);
    pair << 0.0, 2.0; // v_S = 1
    CHECK(metrics::configuration_coherence(pair) == doctest::Approx(0.5));

    Eigen::MatrixXd wider(1, 2);
    wider << 0.0, 4.0;
    CHECK(metrics::configuration_coherence(wider) < metrics::configuration_coherence(pair));
}

TEST_CASE("coherence stays in (0, 1] and reaches 1 only for identical vectors") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::MatrixXd points(2, 5);
        for (Eigen::Index c = 0; c < 5; ++c)
            points.col(c) = Eigen::Vector2d(rng.uniform(-3, 3), rng.uniform(-3, 3));
        const double c = metrics::configuration_coherence(points);
        CHECK(c > 0.0);
        CHECK(c <= 1.0);
        CHECK(c < 1.0); // random reals collide with probability zero
    }
}

TEST_CASE("global usage hand cases") {
    const UsageBounds bounds = bounds_1d(0.0, 10.0);

    const ConfigurationSeries constant = series_1d({{4.0, 4.0}, {4.0, 4.0}, {4.0, 4.0}});
    CHECK(metrics::global_parameter_usage(constant, 0, 2, 2, bounds).value == 0.0);

    const ConfigurationSeries full = series_1d({{0.0}, {10.0}, {5.0}});
    CHECK(metrics::global_parameter_usage(full, 0, 2, 2, bounds).value == doctest::Approx(1.0));

    const ConfigurationSeries mid = series_1d({{2.0, 5.0}, {3.0, 6.0}, {4.0, 7.0}});
    CHECK(metrics::global_parameter_usage(mid, 0, 2, 2, bounds).value == doctest::Approx(0.5));
}

TEST_CASE("average usage hand cases") {
    const UsageBounds bounds = bounds_1d(0.0, 10.0);

    const ConfigurationSeries constant = series_1d({{4.0, 9.0}, {4.0, 9.0}, {4.0, 9.0}});
    CHECK(metrics::average_parameter_usage(constant, 0, 2, 2, bounds).value == 0.0);

    const ConfigurationSeries full = series_1d({{0.0, 10.0}, {10.0, 0.0}, {5.0, 5.0}});
    CHECK(metrics::average_parameter_usage(full, 0, 2, 2, bounds).value == doctest::Approx(1.0));

    // Agent ranges 2 and 4 over bounds [0, 10]: (2 + 4) / (10 * 2) = 0.3.
    const ConfigurationSeries mixed = series_1d({{1.0, 3.0}, {2.0, 5.0}, {3.0, 7.0}});
    CHECK(metrics::average_parameter_usage(mixed, 0, 2, 2, bounds).value == doctest::Approx(0.3));
}

TEST_CASE("usage window covers t - L .. t and warms up accordingly") {
    const UsageBounds bounds = bounds_1d(0.0, 10.0);
    const ConfigurationSeries s = series_1d({{0.0}, {1.0}, {2.0}, {3.0}});
    // Window [1, 3] excludes the tick-0 value.
    CHECK(metrics::global_parameter_usage(s, 0, 3, 2, bounds).value == doctest::Approx(0.2));
    CHECK_THROWS_AS((void)metrics::global_parameter_usage(s, 0, 1, 2, bounds), WarmupError);
    CHECK_THROWS_AS((void)metrics::average_parameter_usage(s, 0, 1, 2, bounds), WarmupError);
}

TEST_CASE("global usage dominates average usage and both ignore time order") {
    const UsageBounds bounds = bounds_1d(0.0, 10.0);
    Rng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<double>> forward(6, std::vector<double>(4));
        for (auto& tick_values : forward)
            for (double& v : tick_values) v = rng.uniform(0.0, 10.0);
        const std::vector<std::vector<double>> backward(forward.rbegin(), forward.rend());
        const ConfigurationSeries f = series_1d(forward);
        const ConfigurationSeries b = series_1d(backward);

        const double fg = metrics::global_parameter_usage(f, 0, 5, 5, bounds).value;
        const double fa = metrics::average_parameter_usage(f, 0, 5, 5, bounds).value;
        CHECK(fg >= fa - 1e-12);
        CHECK(fg == doctest::Approx(metrics::global_parameter_usage(b, 0, 5, 5, bounds).value));
        CHECK(fa == doctest::Approx(metrics::average_parameter_usage(b, 0, 5, 5, bounds).value));
    }
}

TEST_CASE("out-of-bounds observations flag but still compute") {
    const UsageBounds bounds = bounds_1d(0.0, 1.0);
    const ConfigurationSeries s = series_1d({{0.5}, {2.0}, {0.5}});
    const auto usage = metrics::global_parameter_usage(s, 0, 2, 2, bounds);
    CHECK(usage.out_of_bounds);
    CHECK(usage.value == doctest::Approx(1.5));

    UsageBounds bad = bounds;
    bad.upper[0] = 0.0;
    CHECK_THROWS_AS((void)metrics::global_parameter_usage(s, 0, 2, 2, bad), std::invalid_argument);
}
