#pragma once

#include "saso/core/statistics.hpp"
#include "saso/scenarios/scenario.hpp"

#include <array>
#include <deque>
#include <vector>

namespace saso::scenarios {

// Rush-hour simulation on two 3x5 Manhattan street grids joined row-wise by
// three bridges (one lane per direction everywhere). Intersections are the
// agents; each one runs a fixed signal cycle and periodically re-splits its
// green budget across the four compass approaches in proportion to recent
// queue lengths. The configuration vector is the per-approach red duration.
//
// 250 background cars drive between random destinations for the whole run.
// At wave1_tick a block of commuters spawns in the homesteads and drives to
// the workplaces (removed on arrival); at wave2_tick the reverse wave runs.
struct TrafficParams {
    int background_cars = 250;
    int wave_size = 500;
    Tick wave1_tick = 250;
    Tick wave2_tick = 750;
    int cycle_budget = 20;        // signal ticks per cycle, shared by 4 approaches
    int adaptation_period = 10;   // ticks between controller re-splits
    int min_green = 1;
    int edge_travel_time = 16;    // ticks a car spends driving down one street
    double queue_smoothing = 8.0; // pseudocount added to mean queue lengths
    int green_deadband = 3;       // ignore re-splits moving no green by more than this
    int queue_hist_max = 50;      // top histogram bin for queue observations
    bool always_green = false;    // test hook: every approach releases each tick
};

class TrafficScenario : public Scenario {
public:
    static constexpr int kRows = 3;
    static constexpr int kIslandCols = 5;
    static constexpr int kCols = 2 * kIslandCols;
    static constexpr int kNodes = kRows * kCols;
    static constexpr int kDirections = 4; // N, E, S, W approaches

    TrafficScenario(const ParamMap& params, std::uint64_t seed);

    std::string name() const override { return "traffic"; }
    std::size_t agent_count() const override { return kNodes; }
    Eigen::Index configuration_dimension() const override { return kDirections; }
    metrics::UsageBounds usage_bounds() const override;

    Tick tick() const override { return tick_; }
    void step() override;

    Eigen::MatrixXd configurations() const override;
    std::vector<double> system_observation() const override;      // red times, existing lanes
    std::vector<double> environment_observation() const override; // queue lengths, existing lanes
    metrics::HistogramSpec system_histogram() const override;
    metrics::HistogramSpec environment_histogram() const override;

    // Introspection (tests and diagnostics).
    const TrafficParams& params() const { return params_; }
    int commuter_count() const;
    int background_count() const;
    const std::array<int, kDirections>& greens_at(int node) const { return green_[static_cast<std::size_t>(node)]; }
    bool lane_exists(int node, int direction) const { return neighbor_[static_cast<std::size_t>(node)][static_cast<std::size_t>(direction)] >= 0; }
    std::vector<std::pair<int, int>> commuter_trips() const; // (origin, destination), spawn order
    static const std::array<int, 3>& homesteads();
    static const std::array<int, 3>& workplaces();
    static int node_id(int row, int col) { return row * kCols + col; }

private:
    struct Car {
        int destination = 0;
        int origin = 0;
        bool commuter = false;
        bool alive = true;
    };

    // A car driving down a street, due at its target queue at `arrival`.
    struct Transit {
        int car = 0;
        int node = 0;
        int direction = 0;
        Tick arrival = 0;
    };

    void build_network();
    void spawn_background(int count);
    void spawn_commuters(int count, const std::array<int, 3>& origins, const std::array<int, 3>& destinations);
    void depart_towards(int car_id, int from_node, Tick arrival);
    void process_arrivals();
    void cross_cars();
    void adapt_controllers();
    int active_direction(int node) const;

    TrafficParams params_;
    Rng rng_;
    Tick tick_ = 0;

    std::array<std::array<int, kDirections>, kNodes> neighbor_{}; // node id or -1
    std::array<std::array<int, kNodes>, kNodes> next_dir_{};      // next_dir_[node][dest]
    std::vector<Car> cars_;
    std::vector<Transit> transit_;
    std::array<std::array<std::deque<int>, kDirections>, kNodes> queue_{};
    std::vector<std::array<int, kDirections>> green_;
    std::vector<std::array<double, kDirections>> queue_accum_;
};

} // namespace saso::scenarios
