#pragma once

#include <Eigen/Dense>

namespace saso::metrics {

// Kernel density estimate with a Gaussian product kernel and per-dimension
// bandwidths: p(x) = (1/m) sum_k prod_j N(x_j; s_jk, h_j). Samples are stored
// column-wise. Evaluation happens in log space (log-sum-exp), so densities of
// well-separated narrow kernels stay usable.
class ParzenDensity {
public:
    // `samples` is dimension x m with m >= 1; `bandwidths` has one positive
    // entry per dimension.
    ParzenDensity(Eigen::MatrixXd samples, Eigen::VectorXd bandwidths);

    // Convenience: one shared bandwidth for every dimension.
    ParzenDensity(Eigen::MatrixXd samples, double bandwidth);

    // Rule-of-thumb bandwidths h_j = sigma_j * (4 / ((d + 2) m))^(1/(d+4)),
    // floored at `floor` so degenerate (constant) dimensions stay usable.
    static Eigen::VectorXd silverman_bandwidths(const Eigen::Ref<const Eigen::MatrixXd>& samples,
                                                double floor = 1e-3);

    // Density built from `samples` with Silverman bandwidths.
    static ParzenDensity from_samples(Eigen::MatrixXd samples, double bandwidth_floor = 1e-3);

    double log_density(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    double density(const Eigen::Ref<const Eigen::VectorXd>& x) const;

    const Eigen::MatrixXd& samples() const { return samples_; }
    const Eigen::VectorXd& bandwidths() const { return bandwidths_; }

private:
    Eigen::MatrixXd samples_;
    Eigen::VectorXd bandwidths_;
    double log_norm_ = 0.0; // log(m) + sum_j log(sqrt(2 pi) h_j)
};

// Sample-based Kullback-Leibler divergence estimate
// D(p||q) ~= (1/m) sum over p's samples of log(p(s) / q(s)), clamped at 0
// (the estimator can go slightly negative). Gaussian kernels keep both
// densities strictly positive everywhere.
double kl_divergence(const ParzenDensity& p, const ParzenDensity& q);

} // namespace saso::metrics
