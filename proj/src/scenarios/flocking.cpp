#include "saso/scenarios/flocking.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace saso::scenarios {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::Vector2d normalized_or_zero(const Eigen::Vector2d& v) {
    const double n = v.norm();
    return n > 0.0 ? Eigen::Vector2d(v / n) : Eigen::Vector2d::Zero();
}

double angle_of(const Eigen::Vector2d& heading) {
    double a = std::atan2(heading.y(), heading.x());
    if (a < 0.0) a += kTwoPi;
    return a;
}

} // namespace

FlockingScenario::FlockingScenario(const ParamMap& params, std::uint64_t seed) : rng_(seed) {
    ParamReader reader(params);
    params_.bird_count = reader.get_int("bird_count", params_.bird_count);
    params_.width = reader.get("width", params_.width);
    params_.height = reader.get("height", params_.height);
    params_.neighbor_radius = reader.get("neighbor_radius", params_.neighbor_radius);
    params_.avoidance_radius = reader.get("avoidance_radius", params_.avoidance_radius);
    params_.align_weight = reader.get("align_weight", params_.align_weight);
    params_.cohere_weight = reader.get("cohere_weight", params_.cohere_weight);
    params_.avoid_weight = reader.get("avoid_weight", params_.avoid_weight);
    params_.speed = reader.get("speed", params_.speed);
    params_.shot_tick = reader.get_int("shot_tick", static_cast<int>(params_.shot_tick));
    params_.shot_radius = reader.get("shot_radius", params_.shot_radius);
    params_.shot_duration = reader.get_int("shot_duration", params_.shot_duration);
    params_.shot_bird = reader.get_int("shot_bird", params_.shot_bird);
    reader.reject_unknown();

    if (params_.bird_count < 1) throw std::invalid_argument("FlockingScenario: needs at least one bird");
    if (params_.width <= 0.0 || params_.height <= 0.0)
        throw std::invalid_argument("FlockingScenario: plane must have positive size");
    if (params_.shot_bird < 0 || params_.shot_bird >= params_.bird_count)
        throw std::invalid_argument("FlockingScenario: shot bird out of range");

    const int n = params_.bird_count;
    positions_.resize(2, n);
    headings_.resize(2, n);
    for (int i = 0; i < n; ++i) {
        positions_(0, i) = rng_.uniform(0.0, params_.width);
        positions_(1, i) = rng_.uniform(0.0, params_.height);
        const double a = rng_.uniform(0.0, kTwoPi);
        headings_(0, i) = std::cos(a);
        headings_(1, i) = std::sin(a);
    }
    shot_affected_.assign(static_cast<std::size_t>(n), false);
}

Eigen::Vector2d FlockingScenario::wrap(Eigen::Vector2d p) const {
    p.x() = std::fmod(p.x(), params_.width);
    if (p.x() < 0.0) p.x() += params_.width;
    p.y() = std::fmod(p.y(), params_.height);
    if (p.y() < 0.0) p.y() += params_.height;
    return p;
}

Eigen::Vector2d FlockingScenario::displacement(const Eigen::Vector2d& from, const Eigen::Vector2d& to) const {
    Eigen::Vector2d d = to - from;
    d.x() -= params_.width * std::round(d.x() / params_.width);
    d.y() -= params_.height * std::round(d.y() / params_.height);
    return d;
}

void FlockingScenario::set_state(int bird, const Eigen::Vector2d& position, double heading_angle) {
    positions_.col(bird) = wrap(position);
    headings_(0, bird) = std::cos(heading_angle);
    headings_(1, bird) = std::sin(heading_angle);
}

double FlockingScenario::heading_angle(int bird) const { return angle_of(headings_.col(bird)); }

void FlockingScenario::step() {
    const int n = params_.bird_count;
    previous_angles_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) previous_angles_[static_cast<std::size_t>(i)] = heading_angle(i);

    ++tick_;

    // The shot is evaluated on the pre-step state: affected birds and the
    // reference point are frozen at the shot tick.
    const bool shot_active = tick_ >= params_.shot_tick &&
                             tick_ < params_.shot_tick + params_.shot_duration &&
                             params_.shot_duration > 0;
    if (tick_ == params_.shot_tick && params_.shot_duration > 0) {
        shot_origin_ = positions_.col(params_.shot_bird);
        for (int i = 0; i < n; ++i) {
            const double dist = displacement(shot_origin_, positions_.col(i)).norm();
            shot_affected_[static_cast<std::size_t>(i)] = dist <= params_.shot_radius;
        }
    }

    Eigen::Matrix2Xd next_headings(2, n);
    for (int i = 0; i < n; ++i) {
        if (shot_active && shot_affected_[static_cast<std::size_t>(i)]) {
            const Eigen::Vector2d away = normalized_or_zero(displacement(shot_origin_, positions_.col(i)));
            next_headings.col(i) = away.isZero() ? headings_.col(i) : away;
            continue;
        }

        Eigen::Vector2d align = Eigen::Vector2d::Zero();
        Eigen::Vector2d neighbor_disp = Eigen::Vector2d::Zero();
        Eigen::Vector2d close_disp = Eigen::Vector2d::Zero();
        int neighbors = 0;
        int close = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const Eigen::Vector2d d = displacement(positions_.col(i), positions_.col(j));
            const double dist = d.norm();
            if (dist <= params_.neighbor_radius) {
                ++neighbors;
                align += headings_.col(j);
                neighbor_disp += d;
            }
            if (dist <= params_.avoidance_radius) {
                ++close;
                close_disp += d;
            }
        }

        Eigen::Vector2d combined = Eigen::Vector2d::Zero();
        if (neighbors > 0) {
            align /= neighbors; // mean neighbour heading
            const Eigen::Vector2d cohere = normalized_or_zero(neighbor_disp / neighbors);
            combined += params_.align_weight * align + params_.cohere_weight * cohere;
        }
        if (close > 0) {
            const Eigen::Vector2d avoid = -normalized_or_zero(close_disp / close);
            combined += params_.avoid_weight * avoid;
        }
        combined = normalized_or_zero(combined);

        const Eigen::Vector2d next = normalized_or_zero(headings_.col(i) + combined);
        next_headings.col(i) = next.isZero() ? headings_.col(i) : next;
    }

    headings_ = next_headings;
    for (int i = 0; i < n; ++i)
        positions_.col(i) = wrap(positions_.col(i) + params_.speed * headings_.col(i));
}

Eigen::MatrixXd FlockingScenario::configurations() const {
    Eigen::MatrixXd config(1, params_.bird_count);
    for (int i = 0; i < params_.bird_count; ++i) config(0, i) = heading_angle(i);
    return config;
}

metrics::UsageBounds FlockingScenario::usage_bounds() const {
    metrics::UsageBounds bounds;
    bounds.lower = Eigen::VectorXd::Zero(1);
    bounds.upper = Eigen::VectorXd::Constant(1, kTwoPi);
    return bounds;
}

std::vector<double> FlockingScenario::system_observation() const {
    std::vector<double> angles(static_cast<std::size_t>(params_.bird_count));
    for (int i = 0; i < params_.bird_count; ++i) angles[static_cast<std::size_t>(i)] = heading_angle(i);
    return angles;
}

std::vector<double> FlockingScenario::environment_observation() const {
    if (tick_ < 1) throw WarmupError("FlockingScenario: environment is the previous tick's headings");
    return previous_angles_;
}

metrics::HistogramSpec FlockingScenario::system_histogram() const { return {100, 0.0, kTwoPi}; }
metrics::HistogramSpec FlockingScenario::environment_histogram() const { return {100, 0.0, kTwoPi}; }

} // namespace saso::scenarios
