#pragma once

#include "saso/core/statistics.hpp"
#include "saso/scenarios/scenario.hpp"

#include <cstdint>
#include <vector>

namespace saso::scenarios {

// Toroidal Game of Life. Every cell is an agent whose configuration is its
// own binary state; the environment observable is the previous tick's grid.
struct LifeParams {
    int rows = 50;
    int cols = 50;
    // Sparse enough that the soup stays active for most of a 1000-tick run
    // instead of freezing into still lifes a few hundred ticks in.
    double alive_probability = 0.35;
};

class LifeScenario : public Scenario {
public:
    LifeScenario(const ParamMap& params, std::uint64_t seed);

    std::string name() const override { return "life"; }
    std::size_t agent_count() const override { return grid_.size(); }
    Eigen::Index configuration_dimension() const override { return 1; }
    metrics::UsageBounds usage_bounds() const override;

    Tick tick() const override { return tick_; }
    void step() override;

    Eigen::MatrixXd configurations() const override;
    std::vector<double> system_observation() const override;
    std::vector<double> environment_observation() const override;
    metrics::HistogramSpec system_histogram() const override { return {2, 0.0, 2.0}; }
    metrics::HistogramSpec environment_histogram() const override { return {2, 0.0, 2.0}; }
    Tick environment_start() const override { return 1; }

    const LifeParams& params() const { return params_; }
    int alive_count() const;
    std::uint8_t cell(int row, int col) const { return grid_[index(row, col)]; }
    void set_cell(int row, int col, std::uint8_t state) { grid_[index(row, col)] = state; }
    void clear();

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(params_.cols) +
               static_cast<std::size_t>(col);
    }

    LifeParams params_;
    Tick tick_ = 0;
    std::vector<std::uint8_t> grid_;
    std::vector<std::uint8_t> previous_;
};

} // namespace saso::scenarios
