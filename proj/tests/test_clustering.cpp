#include "saso/core/statistics.hpp"
#include "saso/metrics/clustering.hpp"

#include <doctest.h>

#include <functional>
#include <limits>
#include <vector>

using namespace saso;

namespace {

Eigen::MatrixXd points_1d(std::initializer_list<double> values) {
    Eigen::MatrixXd m(1, static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) m(0, i++) = v;
    return m;
}

// Exhaustive minimum over all partitions into at most k clusters of the plain
// distance sum to cluster means.
double best_partition_cost(const Eigen::MatrixXd& points, int k) {
    const int n = static_cast<int>(points.cols());
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    double best = std::numeric_limits<double>::infinity();
    std::function<void(int, int)> recurse = [&](int index, int used) {
        if (index == n) {
            double cost = 0.0;
            for (int c = 0; c < used; ++c) {
                Eigen::VectorXd mean = Eigen::VectorXd::Zero(points.rows());
                int members = 0;
                for (int p = 0; p < n; ++p)
                    if (assignment[static_cast<std::size_t>(p)] == c) {
                        mean += points.col(p);
                        ++members;
                    }
                mean /= members;
                for (int p = 0; p < n; ++p)
                    if (assignment[static_cast<std::size_t>(p)] == c) cost += (points.col(p) - mean).norm();
            }
            best = std::min(best, cost);
            return;
        }
        for (int c = 0; c <= std::min(used, k - 1); ++c) {
            assignment[static_cast<std::size_t>(index)] = c;
            recurse(index + 1, std::max(used, c + 1));
        }
    };
    recurse(0, 0);
    return best;
}

} // namespace

TEST_CASE("average centroid distance on hand cases") {
    Eigen::MatrixXd same(2, 4);
    same.colwise() = Eigen::Vector2d(1.0, -2.0);
    CHECK(metrics::average_centroid_distance(same, 1) == 0.0);
    CHECK(metrics::average_centroid_distance(same, 3) == 0.0);

    // {0, 2} with k = 1: centroid 1, s_1 = (1 + 1) / 1 = 2.
    CHECK(metrics::average_centroid_distance(points_1d({0.0, 2.0}), 1) == doctest::Approx(2.0));
    CHECK(metrics::average_centroid_distance(points_1d({0.0, 2.0}), 2) == doctest::Approx(0.0));

    CHECK_THROWS_AS((void)metrics::average_centroid_distance(points_1d({0.0, 2.0}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)metrics::average_centroid_distance(points_1d({0.0, 2.0}), 0),
                    std::invalid_argument);
}

TEST_CASE("configuration variability on hand cases") {
    Eigen::MatrixXd same(1, 4);
    same.setConstant(7.0);
    CHECK(metrics::configuration_variability(same) == 0.0); // k_max = 2, both s_k zero

    // k_max = ceil(sqrt(2)) = 2, c_v = (2 + 0) / 2 = 1.
    CHECK(metrics::configuration_variability(points_1d({0.0, 2.0})) == doctest::Approx(1.0));
}

TEST_CASE("clustering matches the exhaustive optimum at desk scale") {
    Rng rng(333);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 6));
        const int dim = static_cast<int>(rng.uniform_int(1, 2));
        Eigen::MatrixXd points(dim, n);
        for (Eigen::Index c = 0; c < n; ++c)
            for (Eigen::Index r = 0; r < dim; ++r) points(r, c) = rng.uniform(-5.0, 5.0);
        for (int k = 1; k <= n; ++k) {
            const double got = metrics::average_centroid_distance(points, k);
            const double want = best_partition_cost(points, k) / static_cast<double>(k);
            CHECK(got == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("s_k vanishes once k covers every distinct point") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXd points(2, 6);
        for (Eigen::Index c = 0; c < 6; ++c)
            points.col(c) = Eigen::Vector2d(rng.uniform(-1, 1), rng.uniform(-1, 1));
        CHECK(metrics::average_centroid_distance(points, 6) == doctest::Approx(0.0));
    }
}

TEST_CASE("duplicate-heavy populations cluster through the weighted path") {
    // 1000 copies of two distinct values: any k >= 2 splits them exactly.
    Eigen::MatrixXd binary(1, 1000);
    for (Eigen::Index c = 0; c < 1000; ++c) binary(0, c) = c % 4 == 0 ? 1.0 : 0.0;
    CHECK(metrics::average_centroid_distance(binary, 2) == doctest::Approx(0.0));
    CHECK(metrics::average_centroid_distance(binary, 30) == doctest::Approx(0.0));

    // k = 1 stays the plain weighted mean: s_1 = 2 n0 n1 / n.
    const double expected = 2.0 * 250.0 * 750.0 / 1000.0;
    CHECK(metrics::average_centroid_distance(binary, 1) == doctest::Approx(expected));

    const auto result = metrics::k_means(binary, 2);
    CHECK(result.assignment[0] != result.assignment[1]);
    CHECK(result.assignment[4] == result.assignment[0]);
}

TEST_CASE("k-means is deterministic") {
    Rng rng(55);
    Eigen::MatrixXd points(2, 12);
    for (Eigen::Index c = 0; c < 12; ++c)
        points.col(c) = Eigen::Vector2d(rng.uniform(-4, 4), rng.uniform(-4, 4));
    const auto a = metrics::k_means(points, 4);
    const auto b = metrics::k_means(points, 4);
    CHECK(a.distance_sum == b.distance_sum);
    CHECK(a.assignment == b.assignment);
    CHECK(a.centers == b.centers);
}
