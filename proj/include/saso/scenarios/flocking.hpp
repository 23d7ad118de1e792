#pragma once

#include "saso/core/statistics.hpp"
#include "saso/scenarios/scenario.hpp"

#include <Eigen/Dense>

#include <vector>

namespace saso::scenarios {

// Birds on a toroidal plane following alignment / cohesion / avoidance rules.
// The configuration of a bird is its heading angle in [0, 2 pi). The system
// is self-contained: the environment observable is the previous tick's
// heading population. At shot_tick one bird is shot at and every bird within
// shot_radius overrides its heading to point straight away from it for
// shot_duration ticks.
struct FlockingParams {
    int bird_count = 50;
    double width = 150.0;
    double height = 150.0;
    double neighbor_radius = 20.0;
    double avoidance_radius = 5.0;
    // Alignment-dominated weights: strong cohesion/avoidance churn the heading
    // distribution so hard that its complexity turns into white noise.
    double align_weight = 1.5;
    double cohere_weight = 0.1;
    double avoid_weight = 0.15;
    double speed = 1.0;
    Tick shot_tick = 500;
    double shot_radius = 50.0;
    int shot_duration = 2;
    int shot_bird = 0;
};

class FlockingScenario : public Scenario {
public:
    FlockingScenario(const ParamMap& params, std::uint64_t seed);

    std::string name() const override { return "flocking"; }
    std::size_t agent_count() const override { return static_cast<std::size_t>(params_.bird_count); }
    Eigen::Index configuration_dimension() const override { return 1; }
    metrics::UsageBounds usage_bounds() const override;

    Tick tick() const override { return tick_; }
    void step() override;

    Eigen::MatrixXd configurations() const override;
    std::vector<double> system_observation() const override;
    std::vector<double> environment_observation() const override;
    metrics::HistogramSpec system_histogram() const override;
    metrics::HistogramSpec environment_histogram() const override;
    Tick environment_start() const override { return 1; }

    const FlockingParams& params() const { return params_; }
    Eigen::Vector2d position(int bird) const { return positions_.col(bird); }
    Eigen::Vector2d heading(int bird) const { return headings_.col(bird); }
    double heading_angle(int bird) const;

    // Initial-condition injection for tests; only meaningful before stepping.
    void set_state(int bird, const Eigen::Vector2d& position, double heading_angle);

private:
    Eigen::Vector2d wrap(Eigen::Vector2d p) const;
    Eigen::Vector2d displacement(const Eigen::Vector2d& from, const Eigen::Vector2d& to) const;

    FlockingParams params_;
    Rng rng_;
    Tick tick_ = 0;
    Eigen::Matrix2Xd positions_;
    Eigen::Matrix2Xd headings_; // unit vectors
    std::vector<double> previous_angles_;
    Eigen::Vector2d shot_origin_ = Eigen::Vector2d::Zero();
    std::vector<bool> shot_affected_;
};

} // namespace saso::scenarios
