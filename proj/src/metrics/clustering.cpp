#include "saso/metrics/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace saso::metrics {

namespace {

struct UniquePoints {
    Eigen::MatrixXd points;          // dimension x u
    Eigen::VectorXd weights;         // multiplicity per unique point
    std::vector<int> original_to_unique;
};

bool lex_less(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b) {
    for (Eigen::Index r = 0; r < a.size(); ++r) {
        if (a[r] < b[r]) return true;
        if (a[r] > b[r]) return false;
    }
    return false;
}

UniquePoints collapse_duplicates(const Eigen::Ref<const Eigen::MatrixXd>& points) {
    const Eigen::Index n = points.cols();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index c = 0; c < n; ++c) order[static_cast<std::size_t>(c)] = c;
    std::sort(order.begin(), order.end(),
              [&points](Eigen::Index a, Eigen::Index b) { return lex_less(points.col(a), points.col(b)); });

    UniquePoints out;
    out.original_to_unique.resize(static_cast<std::size_t>(n));
    std::vector<Eigen::Index> unique_cols;
    std::vector<double> weights;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Eigen::Index col = order[i];
        if (i == 0 || points.col(col) != points.col(unique_cols.back())) {
            unique_cols.push_back(col);
            weights.push_back(0.0);
        }
        out.original_to_unique[static_cast<std::size_t>(col)] = static_cast<int>(unique_cols.size()) - 1;
        weights.back() += 1.0;
    }
    out.points.resize(points.rows(), static_cast<Eigen::Index>(unique_cols.size()));
    for (std::size_t i = 0; i < unique_cols.size(); ++i)
        out.points.col(static_cast<Eigen::Index>(i)) = points.col(unique_cols[i]);
    out.weights = Eigen::Map<const Eigen::VectorXd>(weights.data(), static_cast<Eigen::Index>(weights.size()));
    return out;
}

struct LloydRun {
    std::vector<int> assignment; // per unique point
    Eigen::MatrixXd centers;
    double cost = std::numeric_limits<double>::infinity();
};

std::vector<int> assign_points(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centers) {
    std::vector<int> assignment(static_cast<std::size_t>(points.cols()), 0);
    for (Eigen::Index p = 0; p < points.cols(); ++p) {
        double best = std::numeric_limits<double>::infinity();
        int best_cluster = 0;
        for (Eigen::Index c = 0; c < centers.cols(); ++c) {
            const double d = (points.col(p) - centers.col(c)).squaredNorm();
            if (d < best) { // ties keep the lowest cluster index
                best = d;
                best_cluster = static_cast<int>(c);
            }
        }
        assignment[static_cast<std::size_t>(p)] = best_cluster;
    }
    return assignment;
}

Eigen::MatrixXd weighted_means(const Eigen::MatrixXd& points, const Eigen::VectorXd& weights,
                               const std::vector<int>& assignment, const Eigen::MatrixXd& previous_centers) {
    Eigen::MatrixXd centers = previous_centers; // emptied clusters keep their center
    const int k = static_cast<int>(previous_centers.cols());
    Eigen::VectorXd mass = Eigen::VectorXd::Zero(k);
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(points.rows(), k);
    for (Eigen::Index p = 0; p < points.cols(); ++p) {
        const int c = assignment[static_cast<std::size_t>(p)];
        sums.col(c) += weights[p] * points.col(p);
        mass[c] += weights[p];
    }
    for (int c = 0; c < k; ++c)
        if (mass[c] > 0.0) centers.col(c) = sums.col(c) / mass[c];
    return centers;
}

double weighted_distance_sum(const Eigen::MatrixXd& points, const Eigen::VectorXd& weights,
                             const std::vector<int>& assignment, const Eigen::MatrixXd& centers) {
    double sum = 0.0;
    for (Eigen::Index p = 0; p < points.cols(); ++p)
        sum += weights[p] * (points.col(p) - centers.col(assignment[static_cast<std::size_t>(p)])).norm();
    return sum;
}

// Runs Lloyd iterations from the given initial centers. Both the initial
// Voronoi partition and the converged one are scored by the plain distance
// sum at their cluster means, and the better one is returned: the mean-update
// steps optimise squared distances, which occasionally walks away from the
// plain-distance optimum this metric is defined on.
LloydRun lloyd_from(const Eigen::MatrixXd& points, const Eigen::VectorXd& weights,
                    Eigen::MatrixXd centers, int max_iterations) {
    LloydRun best;
    std::vector<int> assignment = assign_points(points, centers);
    {
        const Eigen::MatrixXd means = weighted_means(points, weights, assignment, centers);
        best.assignment = assignment;
        best.centers = means;
        best.cost = weighted_distance_sum(points, weights, assignment, means);
    }
    for (int iter = 0; iter < max_iterations; ++iter) {
        centers = weighted_means(points, weights, assignment, centers);
        std::vector<int> next = assign_points(points, centers);
        const Eigen::MatrixXd means = weighted_means(points, weights, next, centers);
        const double cost = weighted_distance_sum(points, weights, next, means);
        if (cost < best.cost) {
            best.assignment = next;
            best.centers = means;
            best.cost = cost;
        }
        if (next == assignment) break;
        assignment = std::move(next);
    }
    return best;
}

Eigen::MatrixXd farthest_point_centers(const Eigen::MatrixXd& points, int k) {
    std::vector<Eigen::Index> chosen;
    Eigen::Index first = 0;
    for (Eigen::Index p = 1; p < points.cols(); ++p)
        if (lex_less(points.col(p), points.col(first))) first = p;
    chosen.push_back(first);
    Eigen::VectorXd min_dist(points.cols());
    for (Eigen::Index p = 0; p < points.cols(); ++p)
        min_dist[p] = (points.col(p) - points.col(first)).norm();
    while (static_cast<int>(chosen.size()) < k) {
        Eigen::Index next = 0;
        for (Eigen::Index p = 1; p < points.cols(); ++p)
            if (min_dist[p] > min_dist[next]) next = p;
        chosen.push_back(next);
        for (Eigen::Index p = 0; p < points.cols(); ++p)
            min_dist[p] = std::min(min_dist[p], (points.col(p) - points.col(next)).norm());
    }
    Eigen::MatrixXd centers(points.rows(), k);
    for (int c = 0; c < k; ++c) centers.col(c) = points.col(chosen[static_cast<std::size_t>(c)]);
    return centers;
}

// Enumerates k-subsets of [0, u) while their count stays within `cap`.
std::vector<std::vector<Eigen::Index>> bounded_subsets(Eigen::Index u, int k, std::size_t cap) {
    double count = 1.0;
    for (int i = 0; i < k; ++i) count *= static_cast<double>(u - i) / (i + 1);
    if (count > static_cast<double>(cap)) return {};
    std::vector<std::vector<Eigen::Index>> subsets;
    std::vector<Eigen::Index> current(static_cast<std::size_t>(k));
    auto recurse = [&](auto&& self, Eigen::Index start, int depth) -> void {
        if (depth == k) {
            subsets.push_back(current);
            return;
        }
        for (Eigen::Index i = start; i <= u - (k - depth); ++i) {
            current[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);
    return subsets;
}

KMeansResult k_means_on_unique(const UniquePoints& unique, int k, int max_iterations) {
    const Eigen::Index u = unique.points.cols();
    const auto original_count = unique.original_to_unique.size();

    KMeansResult result;
    if (u <= static_cast<Eigen::Index>(k)) {
        // Each distinct point is its own center; surplus centers duplicate the
        // last point and stay empty.
        result.centers.resize(unique.points.rows(), k);
        for (int c = 0; c < k; ++c)
            result.centers.col(c) = unique.points.col(std::min<Eigen::Index>(c, u - 1));
        result.assignment.resize(original_count);
        for (std::size_t p = 0; p < original_count; ++p)
            result.assignment[p] = unique.original_to_unique[p];
        result.distance_sum = 0.0;
        return result;
    }

    LloydRun best = lloyd_from(unique.points, unique.weights,
                               farthest_point_centers(unique.points, k), max_iterations);
    constexpr std::size_t kSubsetCap = 200; // desk-scale exhaustive restarts
    for (const auto& subset : bounded_subsets(u, k, kSubsetCap)) {
        Eigen::MatrixXd centers(unique.points.rows(), k);
        for (int c = 0; c < k; ++c) centers.col(c) = unique.points.col(subset[static_cast<std::size_t>(c)]);
        LloydRun run = lloyd_from(unique.points, unique.weights, std::move(centers), max_iterations);
        if (run.cost < best.cost) best = std::move(run);
    }

    result.centers = best.centers;
    result.distance_sum = best.cost;
    result.assignment.resize(original_count);
    for (std::size_t p = 0; p < original_count; ++p)
        result.assignment[p] = best.assignment[static_cast<std::size_t>(unique.original_to_unique[p])];
    return result;
}

} // namespace

KMeansResult k_means(const Eigen::Ref<const Eigen::MatrixXd>& points, int k, int max_iterations) {
    if (points.cols() < 1) throw std::invalid_argument("k_means: needs at least one point");
    if (k < 1 || k > points.cols())
        throw std::invalid_argument("k_means: k must satisfy 1 <= k <= point count");
    return k_means_on_unique(collapse_duplicates(points), k, max_iterations);
}

double average_centroid_distance(const Eigen::Ref<const Eigen::MatrixXd>& points, int k) {
    return k_means(points, k).distance_sum / static_cast<double>(k);
}

double configuration_variability(const Eigen::Ref<const Eigen::MatrixXd>& points) {
    if (points.cols() < 1) throw std::invalid_argument("configuration_variability: needs at least one point");
    const int k_max = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(points.cols()))));
    const UniquePoints unique = collapse_duplicates(points); // shared across all k
    double sum = 0.0;
    for (int k = 1; k <= k_max; ++k)
        sum += k_means_on_unique(unique, k, 100).distance_sum / static_cast<double>(k);
    return sum / static_cast<double>(k_max);
}

} // namespace saso::metrics
