#include "saso/metrics/kernel_density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace saso::metrics {

namespace {

double log_sum_exp(const Eigen::VectorXd& exponents) {
    const double peak = exponents.maxCoeff();
    return peak + std::log((exponents.array() - peak).exp().sum());
}

} // namespace

ParzenDensity::ParzenDensity(Eigen::MatrixXd samples, Eigen::VectorXd bandwidths)
    : samples_(std::move(samples)), bandwidths_(std::move(bandwidths)) {
    if (samples_.cols() < 1)
        throw std::invalid_argument("ParzenDensity: needs at least one sample");
    if (bandwidths_.size() != samples_.rows())
        throw std::invalid_argument("ParzenDensity: one bandwidth per dimension required");
    if ((bandwidths_.array() <= 0.0).any())
        throw std::invalid_argument("ParzenDensity: bandwidths must be positive");

    log_norm_ = std::log(static_cast<double>(samples_.cols()));
    for (Eigen::Index j = 0; j < bandwidths_.size(); ++j)
        log_norm_ += std::log(std::sqrt(2.0 * std::numbers::pi) * bandwidths_[j]);
}

ParzenDensity::ParzenDensity(Eigen::MatrixXd samples, double bandwidth)
    : ParzenDensity(std::move(samples),
                    Eigen::VectorXd::Constant(samples.rows(), bandwidth)) {}

Eigen::VectorXd ParzenDensity::silverman_bandwidths(const Eigen::Ref<const Eigen::MatrixXd>& samples,
                                                    double floor) {
    const auto m = static_cast<double>(samples.cols());
    const auto d = static_cast<double>(samples.rows());
    const double factor = std::pow(4.0 / ((d + 2.0) * m), 1.0 / (d + 4.0));
    Eigen::VectorXd h(samples.rows());
    for (Eigen::Index j = 0; j < samples.rows(); ++j) {
        const Eigen::ArrayXd row = samples.row(j).array();
        const double mean = row.mean();
        const double sigma = std::sqrt((row - mean).square().mean());
        h[j] = std::max(floor, sigma * factor);
    }
    return h;
}

ParzenDensity ParzenDensity::from_samples(Eigen::MatrixXd samples, double bandwidth_floor) {
    Eigen::VectorXd h = silverman_bandwidths(samples, bandwidth_floor);
    return ParzenDensity(std::move(samples), std::move(h));
}

double ParzenDensity::log_density(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    if (x.size() != samples_.rows())
        throw std::invalid_argument("ParzenDensity::log_density: dimension mismatch");
    Eigen::VectorXd exponents(samples_.cols());
    for (Eigen::Index k = 0; k < samples_.cols(); ++k) {
        const Eigen::ArrayXd scaled = ((x - samples_.col(k)).array() / bandwidths_.array());
        exponents[k] = -0.5 * scaled.square().sum();
    }
    return log_sum_exp(exponents) - log_norm_;
}

double ParzenDensity::density(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return std::exp(log_density(x));
}

double kl_divergence(const ParzenDensity& p, const ParzenDensity& q) {
    const Eigen::MatrixXd& support = p.samples();
    double sum = 0.0;
    for (Eigen::Index k = 0; k < support.cols(); ++k)
        sum += p.log_density(support.col(k)) - q.log_density(support.col(k));
    return std::max(0.0, sum / static_cast<double>(support.cols()));
}

} // namespace saso::metrics
