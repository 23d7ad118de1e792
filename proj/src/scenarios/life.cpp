#include "saso/scenarios/life.hpp"

#include <stdexcept>

namespace saso::scenarios {

LifeScenario::LifeScenario(const ParamMap& params, std::uint64_t seed) {
    ParamReader reader(params);
    params_.rows = reader.get_int("rows", params_.rows);
    params_.cols = reader.get_int("cols", params_.cols);
    params_.alive_probability = reader.get("alive_probability", params_.alive_probability);
    reader.reject_unknown();

    if (params_.rows < 1 || params_.cols < 1)
        throw std::invalid_argument("LifeScenario: grid must be at least 1x1");
    if (params_.alive_probability < 0.0 || params_.alive_probability > 1.0)
        throw std::invalid_argument("LifeScenario: alive probability must lie in [0, 1]");

    grid_.assign(static_cast<std::size_t>(params_.rows) * static_cast<std::size_t>(params_.cols), 0);
    Rng rng(seed);
    for (auto& cell : grid_) cell = rng.bernoulli(params_.alive_probability) ? 1 : 0;
}

void LifeScenario::clear() {
    std::fill(grid_.begin(), grid_.end(), static_cast<std::uint8_t>(0));
}

void LifeScenario::step() {
    previous_ = grid_;
    std::vector<std::uint8_t> next(grid_.size(), 0);
    const int rows = params_.rows;
    const int cols = params_.cols;
    for (int r = 0; r < rows; ++r) {
        const int up = (r + rows - 1) % rows;
        const int down = (r + 1) % rows;
        for (int c = 0; c < cols; ++c) {
            const int left = (c + cols - 1) % cols;
            const int right = (c + 1) % cols;
            const int neighbours =
                previous_[index(up, left)] + previous_[index(up, c)] + previous_[index(up, right)] +
                previous_[index(r, left)] + previous_[index(r, right)] +
                previous_[index(down, left)] + previous_[index(down, c)] + previous_[index(down, right)];
            const bool alive = previous_[index(r, c)] != 0;
            next[index(r, c)] = (neighbours == 3 || (alive && neighbours == 2)) ? 1 : 0;
        }
    }
    grid_ = std::move(next);
    ++tick_;
}

Eigen::MatrixXd LifeScenario::configurations() const {
    Eigen::MatrixXd config(1, static_cast<Eigen::Index>(grid_.size()));
    for (std::size_t i = 0; i < grid_.size(); ++i)
        config(0, static_cast<Eigen::Index>(i)) = static_cast<double>(grid_[i]);
    return config;
}

metrics::UsageBounds LifeScenario::usage_bounds() const {
    metrics::UsageBounds bounds;
    bounds.lower = Eigen::VectorXd::Zero(1);
    bounds.upper = Eigen::VectorXd::Constant(1, 1.0);
    return bounds;
}

std::vector<double> LifeScenario::system_observation() const {
    std::vector<double> states(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) states[i] = static_cast<double>(grid_[i]);
    return states;
}

std::vector<double> LifeScenario::environment_observation() const {
    if (tick_ < 1) throw WarmupError("LifeScenario: environment is the previous tick's grid");
    std::vector<double> states(previous_.size());
    for (std::size_t i = 0; i < previous_.size(); ++i) states[i] = static_cast<double>(previous_[i]);
    return states;
}

int LifeScenario::alive_count() const {
    int n = 0;
    for (std::uint8_t cell : grid_) n += cell;
    return n;
}

} // namespace saso::scenarios
