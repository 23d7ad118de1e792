#include "saso/core/configuration_series.hpp"
#include "saso/core/statistics.hpp"

#include <doctest.h>

#include <limits>
#include <vector>

using namespace saso;

TEST_CASE("record then query returns what was recorded") {
    ConfigurationSeries series(1, 1);
    series.record(0, 0, Eigen::VectorXd::Constant(1, 1.0));
    CHECK(series.value_at(0, 0)[0] == 1.0);
    CHECK(series.horizon() == 0);
}

TEST_CASE("record rejects contract violations") {
    ConfigurationSeries series(3, 2);
    CHECK_THROWS_AS(series.record(0, 0, Eigen::VectorXd::Zero(2)), std::invalid_argument);

    series.record(0, 0, Eigen::VectorXd::Zero(3));
    CHECK_THROWS_AS(series.record(0, 0, Eigen::VectorXd::Zero(3)), std::invalid_argument);

    Eigen::VectorXd bad = Eigen::VectorXd::Zero(3);
    bad[1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(series.record(0, 1, bad), std::invalid_argument);

    // Horizon only advances once every agent has the tick.
    CHECK(series.horizon() == -1);
    series.record(0, 1, Eigen::VectorXd::Ones(3));
    CHECK(series.horizon() == 0);
    CHECK_THROWS_AS(series.record(2, 0, Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST_CASE("slice returns the window contents in tick order") {
    ConfigurationSeries series(1, 2);
    for (Tick t = 0; t <= 9; ++t) {
        series.record(t, 0, Eigen::VectorXd::Constant(1, static_cast<double>(t)));
        series.record(t, 1, Eigen::VectorXd::Constant(1, static_cast<double>(10 * t)));
    }

    const Eigen::MatrixXd window = series.slice(Window{9, 5}, 0);
    REQUIRE(window.cols() == 5);
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(window(0, i) == 5.0 + i);

    CHECK_THROWS_AS((void)series.slice(Window{3, 5}, 0), WarmupError);

    const Eigen::MatrixXd first = series.slice(Window{0, 1}, 0);
    CHECK(first(0, 0) == 0.0);

    // Tick-major pooled slice: agents interleave within each tick.
    const Eigen::MatrixXd pooled = series.slice(Window{1, 2});
    REQUIRE(pooled.cols() == 4);
    CHECK(pooled(0, 0) == 0.0);
    CHECK(pooled(0, 1) == 0.0);
    CHECK(pooled(0, 2) == 1.0);
    CHECK(pooled(0, 3) == 10.0);

    CHECK_THROWS_AS((void)series.slice(Window{20, 2}, 0), std::out_of_range);
}

TEST_CASE("histogram binning follows the clamping convention") {
    const Histogram h = make_histogram(std::vector<double>{0.0, 0.5, 1.0}, 2, 0.0, 1.0);
    CHECK(h.counts == std::vector<std::int64_t>{1, 2});

    const Histogram h2 = make_histogram(std::vector<double>{0.25, 0.25, 0.25, 0.25}, 4, 0.0, 1.0);
    CHECK(h2.counts == std::vector<std::int64_t>{0, 4, 0, 0});

    const Histogram h3 = make_histogram(std::vector<double>{-5.0, 5.0}, 2, 0.0, 1.0);
    CHECK(h3.counts == std::vector<std::int64_t>{1, 1});

    const Histogram empty = make_histogram(std::vector<double>{}, 3, 0.0, 1.0);
    CHECK(empty.total() == 0);
    CHECK_THROWS_AS((void)empty.probabilities(), std::invalid_argument);
    CHECK_THROWS_AS((void)make_histogram(std::vector<double>{1.0}, 0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_histogram(std::vector<double>{1.0}, 2, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("histogram probabilities sum to one") {
    Rng rng(99);
    std::vector<double> values(257);
    for (double& v : values) v = rng.uniform(-2.0, 3.0);
    const Histogram h = make_histogram(values, 17, -1.0, 2.0);
    CHECK(h.total() == 257);
    CHECK(h.probabilities().sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mean and population variance") {
    const MeanVariance constant = mean_and_variance(std::vector<double>{1.0, 1.0, 1.0});
    CHECK(constant.mean == 1.0);
    CHECK(constant.variance == 0.0);

    const MeanVariance pair = mean_and_variance(std::vector<double>{0.0, 2.0});
    CHECK(pair.mean == doctest::Approx(1.0));
    CHECK(pair.variance == doctest::Approx(1.0)); // ((0-1)^2 + (2-1)^2) / 2

    const MeanVariance single = mean_and_variance(std::vector<double>{3.0});
    CHECK(single.mean == 3.0);
    CHECK(single.variance == 0.0);

    CHECK_THROWS_AS((void)mean_and_variance(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("metric series enforces strictly increasing ticks") {
    MetricSeries series("demo", {{"L", 5.0}});
    series.append(3, 0.5);
    series.append(4, 0.25);
    CHECK_THROWS_AS(series.append(4, 0.1), std::invalid_argument);
    CHECK(series.at(3) == 0.5);
    CHECK(series.mean() == doctest::Approx(0.375));
    CHECK(series.min() == 0.25);
    CHECK(series.max() == 0.5);
    CHECK(series.params().at("L") == 5.0);
}

TEST_CASE("seeded rng streams are reproducible") {
    Rng a(7);
    Rng b(7);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng c(7);
    Rng d(8);
    bool diverged = false;
    for (int i = 0; i < 10; ++i) diverged = diverged || c.next_u64() != d.next_u64();
    CHECK(diverged);

    Rng bounds_check(1);
    for (int i = 0; i < 1000; ++i) {
        const double u = bounds_check.uniform(2.0, 3.0);
        CHECK(u >= 2.0);
        CHECK(u < 3.0);
        const auto n = bounds_check.uniform_int(-2, 4);
        CHECK(n >= -2);
        CHECK(n <= 4);
    }
}
