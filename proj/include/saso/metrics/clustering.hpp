#pragma once

#include <Eigen/Dense>

#include <vector>

namespace saso::metrics {

struct KMeansResult {
    Eigen::MatrixXd centers;     // dimension x k
    std::vector<int> assignment; // cluster index per input column
    double distance_sum = 0.0;   // sum over points of ||p - C(p)|| (plain, not squared)
};

// Deterministic k-means (Lloyd's algorithm) over column-wise points.
//
// Exact duplicate columns are collapsed into weighted unique points first, so
// large populations with few distinct configurations cluster cheaply.
// Initialisation is farthest-point seeding from the lexicographically
// smallest unique point; at desk scale (few unique points) every k-subset of
// unique points is additionally tried as a start and the best run by plain
// distance sum wins. Assignment ties break to the lowest cluster index, and
// an emptied cluster keeps its previous center.
KMeansResult k_means(const Eigen::Ref<const Eigen::MatrixXd>& points, int k, int max_iterations = 100);

// Average centroid distance s_k: k-means distance sum divided by the cluster
// count k (not the point count).
double average_centroid_distance(const Eigen::Ref<const Eigen::MatrixXd>& points, int k);

// Mean of s_k for k = 1..ceil(sqrt(point count)).
double configuration_variability(const Eigen::Ref<const Eigen::MatrixXd>& points);

} // namespace saso::metrics
