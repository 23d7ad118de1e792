#include "saso/metrics/kernel_density.hpp"

#include <doctest.h>

#include <cmath>

using namespace saso;
using metrics::ParzenDensity;

namespace {
Eigen::MatrixXd points_1d(std::initializer_list<double> values) {
    Eigen::MatrixXd m(1, static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) m(0, i++) = v;
    return m;
}

Eigen::VectorXd scalar(double v) { return Eigen::VectorXd::Constant(1, v); }
} // namespace

TEST_CASE("single-kernel density peaks at its sample") {
    for (double h : {0.1, 1.0, 4.0}) {
        const ParzenDensity p(points_1d({0.0}), h);
        const double peak = p.density(scalar(0.0));
        for (double x : {-3.0, -0.2, 0.4, 2.0}) CHECK(peak > p.density(scalar(x)));
    }
}

TEST_CASE("duplicate samples collapse to a single kernel") {
    const ParzenDensity one(points_1d({0.7}), 0.9);
    const ParzenDensity two(points_1d({0.7, 0.7}), 0.9);
    for (double x : {-1.0, 0.0, 0.7, 2.5})
        CHECK(one.density(scalar(x)) == doctest::Approx(two.density(scalar(x))).epsilon(1e-14));
}

TEST_CASE("symmetric sample pair yields a density symmetric about the mean") {
    const ParzenDensity p(points_1d({1.0, 3.0}), 0.6); // mean 2
    for (double delta : {0.1, 1.0, 2.3})
        CHECK(p.density(scalar(2.0 - delta)) == doctest::Approx(p.density(scalar(2.0 + delta))).epsilon(1e-13));
    // The two sample points themselves share a common value.
    CHECK(p.density(scalar(1.0)) == doctest::Approx(p.density(scalar(3.0))).epsilon(1e-13));
}

TEST_CASE("silverman bandwidths floor degenerate dimensions") {
    Eigen::MatrixXd samples(2, 4);
    samples.row(0) << 1.0, 2.0, 3.0, 4.0;
    samples.row(1).setConstant(5.0);
    const Eigen::VectorXd h = ParzenDensity::silverman_bandwidths(samples, 1e-3);
    CHECK(h[0] > 1e-3);
    CHECK(h[1] == 1e-3);

    // sigma * (4 / ((d + 2) m))^(1/(d+4)) with d = 2, m = 4.
    const double sigma = std::sqrt(1.25);
    CHECK(h[0] == doctest::Approx(sigma * std::pow(4.0 / 16.0, 1.0 / 6.0)));
}

TEST_CASE("parzen density validates its inputs") {
    CHECK_THROWS_AS(ParzenDensity(Eigen::MatrixXd(1, 0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ParzenDensity(points_1d({1.0}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ParzenDensity(points_1d({1.0}), Eigen::VectorXd::Ones(2)), std::invalid_argument);
}

TEST_CASE("kl divergence of a density against itself is zero") {
    const ParzenDensity p(points_1d({0.3, 1.1, 2.0}), 0.5);
    const ParzenDensity q(points_1d({0.3, 1.1, 2.0}), 0.5);
    CHECK(metrics::kl_divergence(p, q) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("kl divergence of separated point masses matches the closed form") {
    // All mass at 0 vs all mass at 10 with h = 1: log ratio at each sample is
    // 10^2 / 2 = 50.
    const ParzenDensity p(points_1d({0.0, 0.0, 0.0}), 1.0);
    const ParzenDensity q(points_1d({10.0, 10.0, 10.0}), 1.0);
    CHECK(metrics::kl_divergence(p, q) == doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("kl divergence grows with cluster separation") {
    double previous = -1.0;
    for (int separation = 0; separation <= 10; ++separation) {
        const ParzenDensity p(points_1d({-0.2, 0.0, 0.2}), 0.7);
        const ParzenDensity q(points_1d({separation - 0.2, static_cast<double>(separation), separation + 0.2}), 0.7);
        const double kl = metrics::kl_divergence(p, q);
        CHECK(kl >= previous - 1e-12);
        CHECK(kl >= 0.0);
        previous = kl;
    }
    CHECK(previous > 1.0);
}

TEST_CASE("kl divergence in more than one dimension") {
    Eigen::MatrixXd a(2, 3);
    a << 0.0, 0.1, -0.1,
         0.0, 0.0, 0.1;
    Eigen::MatrixXd far = a;
    far.row(0).array() += 6.0;
    const auto p = ParzenDensity::from_samples(a);
    const auto q = ParzenDensity::from_samples(far);
    CHECK(metrics::kl_divergence(p, p) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(metrics::kl_divergence(p, q) > 10.0);
}
