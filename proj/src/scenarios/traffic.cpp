#include "saso/scenarios/traffic.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace saso::scenarios {

namespace {
constexpr int kNorth = 0;
constexpr int kEast = 1;
constexpr int kSouth = 2;
constexpr int kWest = 3;

int opposite(int direction) {
    switch (direction) {
        case kNorth: return kSouth;
        case kEast: return kWest;
        case kSouth: return kNorth;
        default: return kEast;
    }
}
} // namespace

const std::array<int, 3>& TrafficScenario::homesteads() {
    static const std::array<int, 3> nodes = {node_id(0, 0), node_id(1, 2), node_id(2, 3)};
    return nodes;
}

const std::array<int, 3>& TrafficScenario::workplaces() {
    static const std::array<int, 3> nodes = {node_id(0, 9), node_id(1, 7), node_id(2, 6)};
    return nodes;
}

TrafficScenario::TrafficScenario(const ParamMap& params, std::uint64_t seed) : rng_(seed) {
    ParamReader reader(params);
    params_.background_cars = reader.get_int("background_cars", params_.background_cars);
    params_.wave_size = reader.get_int("wave_size", params_.wave_size);
    params_.wave1_tick = reader.get_int("wave1_tick", static_cast<int>(params_.wave1_tick));
    params_.wave2_tick = reader.get_int("wave2_tick", static_cast<int>(params_.wave2_tick));
    params_.cycle_budget = reader.get_int("cycle_budget", params_.cycle_budget);
    params_.adaptation_period = reader.get_int("adaptation_period", params_.adaptation_period);
    params_.min_green = reader.get_int("min_green", params_.min_green);
    params_.edge_travel_time = reader.get_int("edge_travel_time", params_.edge_travel_time);
    params_.queue_smoothing = reader.get("queue_smoothing", params_.queue_smoothing);
    params_.green_deadband = reader.get_int("green_deadband", params_.green_deadband);
    params_.queue_hist_max = reader.get_int("queue_hist_max", params_.queue_hist_max);
    params_.always_green = reader.get("always_green", 0.0) != 0.0;
    reader.reject_unknown();

    if (params_.cycle_budget < kDirections * params_.min_green)
        throw std::invalid_argument("TrafficScenario: cycle budget below total minimum green");
    if (params_.adaptation_period < 1)
        throw std::invalid_argument("TrafficScenario: adaptation period must be >= 1");
    if (params_.edge_travel_time < 1)
        throw std::invalid_argument("TrafficScenario: edge travel time must be >= 1");
    if (params_.background_cars < 0 || params_.wave_size < 0)
        throw std::invalid_argument("TrafficScenario: car counts must be non-negative");

    build_network();

    // Equal split across the four approaches until the first adaptation.
    const int base = params_.cycle_budget / kDirections;
    const int leftover = params_.cycle_budget - kDirections * base;
    std::array<int, kDirections> initial{};
    for (int d = 0; d < kDirections; ++d) initial[static_cast<std::size_t>(d)] = base + (d < leftover ? 1 : 0);
    green_.assign(kNodes, initial);
    queue_accum_.assign(kNodes, {0.0, 0.0, 0.0, 0.0});

    spawn_background(params_.background_cars);
    if (params_.wave1_tick == 0) spawn_commuters(params_.wave_size, homesteads(), workplaces());
    if (params_.wave2_tick == 0) spawn_commuters(params_.wave_size, workplaces(), homesteads());
}

void TrafficScenario::build_network() {
    for (int r = 0; r < kRows; ++r) {
        for (int c = 0; c < kCols; ++c) {
            const int v = node_id(r, c);
            auto& nb = neighbor_[static_cast<std::size_t>(v)];
            nb[kNorth] = r > 0 ? node_id(r - 1, c) : -1;
            nb[kSouth] = r < kRows - 1 ? node_id(r + 1, c) : -1;
            nb[kWest] = c > 0 ? node_id(r, c - 1) : -1;
            nb[kEast] = c < kCols - 1 ? node_id(r, c + 1) : -1;
        }
    }

    // Hop-count shortest paths via BFS from every destination; next-hop ties
    // break to the lowest neighbouring node id.
    for (int dest = 0; dest < kNodes; ++dest) {
        std::array<int, kNodes> dist{};
        dist.fill(-1);
        dist[static_cast<std::size_t>(dest)] = 0;
        std::queue<int> frontier;
        frontier.push(dest);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (int d = 0; d < kDirections; ++d) {
                const int w = neighbor_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
                if (w >= 0 && dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    frontier.push(w);
                }
            }
        }
        for (int v = 0; v < kNodes; ++v) {
            if (v == dest) {
                next_dir_[static_cast<std::size_t>(v)][static_cast<std::size_t>(dest)] = -1;
                continue;
            }
            int best_dir = -1;
            int best_node = -1;
            for (int d = 0; d < kDirections; ++d) {
                const int w = neighbor_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
                if (w < 0 || dist[static_cast<std::size_t>(w)] != dist[static_cast<std::size_t>(v)] - 1) continue;
                if (best_dir < 0 || w < best_node) {
                    best_dir = d;
                    best_node = w;
                }
            }
            next_dir_[static_cast<std::size_t>(v)][static_cast<std::size_t>(dest)] = best_dir;
        }
    }
}

void TrafficScenario::depart_towards(int car_id, int from_node, Tick arrival) {
    const Car& car = cars_[static_cast<std::size_t>(car_id)];
    const int dir = next_dir_[static_cast<std::size_t>(from_node)][static_cast<std::size_t>(car.destination)];
    const int target = neighbor_[static_cast<std::size_t>(from_node)][static_cast<std::size_t>(dir)];
    transit_.push_back({car_id, target, opposite(dir), arrival});
}

void TrafficScenario::process_arrivals() {
    std::vector<Transit> still_driving;
    still_driving.reserve(transit_.size());
    for (const Transit& t : transit_) {
        if (t.arrival <= tick_)
            queue_[static_cast<std::size_t>(t.node)][static_cast<std::size_t>(t.direction)].push_back(t.car);
        else
            still_driving.push_back(t);
    }
    transit_ = std::move(still_driving);
}

void TrafficScenario::spawn_background(int count) {
    // Background cars start mid-drive, staggered over one street length.
    for (int i = 0; i < count; ++i) {
        const int origin = static_cast<int>(rng_.uniform_int(0, kNodes - 1));
        int destination = static_cast<int>(rng_.uniform_int(0, kNodes - 2));
        if (destination >= origin) ++destination;
        cars_.push_back({destination, origin, false, true});
        const Tick arrival = tick_ + rng_.uniform_int(1, params_.edge_travel_time);
        depart_towards(static_cast<int>(cars_.size()) - 1, origin, arrival);
    }
}

void TrafficScenario::spawn_commuters(int count, const std::array<int, 3>& origins,
                                      const std::array<int, 3>& destinations) {
    for (int i = 0; i < count; ++i) {
        const int origin = origins[static_cast<std::size_t>(rng_.uniform_int(0, 2))];
        const int destination = destinations[static_cast<std::size_t>(rng_.uniform_int(0, 2))];
        cars_.push_back({destination, origin, true, true});
        depart_towards(static_cast<int>(cars_.size()) - 1, origin, tick_ + params_.edge_travel_time);
    }
}

int TrafficScenario::active_direction(int node) const {
    const int phase = static_cast<int>(tick_ % params_.cycle_budget);
    int acc = 0;
    for (int d = 0; d < kDirections; ++d) {
        acc += green_[static_cast<std::size_t>(node)][static_cast<std::size_t>(d)];
        if (phase < acc) return d;
    }
    return kDirections - 1;
}

void TrafficScenario::cross_cars() {
    // One car per green lane per tick. A crossing car departs onto the next
    // street and only reappears at a queue after the travel time, so it can
    // never cross two intersections in one tick.
    for (int v = 0; v < kNodes; ++v) {
        for (int d = 0; d < kDirections; ++d) {
            if (!params_.always_green && d != active_direction(v)) continue;
            auto& lane = queue_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
            if (lane.empty()) continue;
            const int car_id = lane.front();
            lane.pop_front();
            Car& car = cars_[static_cast<std::size_t>(car_id)];
            if (car.destination == v) {
                if (car.commuter) {
                    car.alive = false;
                    continue;
                }
                int destination = static_cast<int>(rng_.uniform_int(0, kNodes - 2));
                if (destination >= v) ++destination;
                car.destination = destination;
            }
            depart_towards(car_id, v, tick_ + params_.edge_travel_time);
        }
    }
}

void TrafficScenario::adapt_controllers() {
    const int budget = params_.cycle_budget;
    const int spare = budget - kDirections * params_.min_green;
    const double period = params_.adaptation_period;
    for (int v = 0; v < kNodes; ++v) {
        // Controllers are independent, so their adaptation phases are
        // staggered: node v re-splits every `period` ticks, offset by its id.
        if ((tick_ + v) % params_.adaptation_period != 0) continue;
        auto& accum = queue_accum_[static_cast<std::size_t>(v)];
        std::array<double, kDirections> weight{};
        double weight_sum = 0.0;
        for (int d = 0; d < kDirections; ++d) {
            weight[static_cast<std::size_t>(d)] = accum[static_cast<std::size_t>(d)] / period + params_.queue_smoothing;
            weight_sum += weight[static_cast<std::size_t>(d)];
            accum[static_cast<std::size_t>(d)] = 0.0;
        }

        // Largest-remainder split of the spare budget, ties to the lowest
        // approach index.
        std::array<int, kDirections> share{};
        std::array<double, kDirections> remainder{};
        int assigned = 0;
        for (int d = 0; d < kDirections; ++d) {
            const double ideal = spare * weight[static_cast<std::size_t>(d)] / weight_sum;
            share[static_cast<std::size_t>(d)] = static_cast<int>(ideal);
            remainder[static_cast<std::size_t>(d)] = ideal - share[static_cast<std::size_t>(d)];
            assigned += share[static_cast<std::size_t>(d)];
        }
        int leftover = spare - assigned;
        while (leftover > 0) {
            int pick = 0;
            for (int d = 1; d < kDirections; ++d)
                if (remainder[static_cast<std::size_t>(d)] > remainder[static_cast<std::size_t>(pick)]) pick = d;
            ++share[static_cast<std::size_t>(pick)];
            remainder[static_cast<std::size_t>(pick)] = -1.0;
            --leftover;
        }

        // Hysteresis: hold the current split unless the proposal moves some
        // approach by more than the dead-band, so signals do not thrash on
        // background noise.
        auto& current = green_[static_cast<std::size_t>(v)];
        int biggest_move = 0;
        for (int d = 0; d < kDirections; ++d)
            biggest_move = std::max(biggest_move,
                                    std::abs(params_.min_green + share[static_cast<std::size_t>(d)] -
                                             current[static_cast<std::size_t>(d)]));
        if (biggest_move <= params_.green_deadband) continue;
        for (int d = 0; d < kDirections; ++d)
            current[static_cast<std::size_t>(d)] = params_.min_green + share[static_cast<std::size_t>(d)];
    }
}

void TrafficScenario::step() {
    ++tick_;
    if (tick_ == params_.wave1_tick) spawn_commuters(params_.wave_size, homesteads(), workplaces());
    if (tick_ == params_.wave2_tick) spawn_commuters(params_.wave_size, workplaces(), homesteads());

    process_arrivals();
    cross_cars();

    for (int v = 0; v < kNodes; ++v)
        for (int d = 0; d < kDirections; ++d)
            queue_accum_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)] +=
                static_cast<double>(queue_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)].size());

    adapt_controllers();
}

Eigen::MatrixXd TrafficScenario::configurations() const {
    Eigen::MatrixXd config(kDirections, kNodes);
    for (int v = 0; v < kNodes; ++v)
        for (int d = 0; d < kDirections; ++d)
            config(d, v) = params_.cycle_budget - green_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
    return config;
}

metrics::UsageBounds TrafficScenario::usage_bounds() const {
    metrics::UsageBounds bounds;
    bounds.lower = Eigen::VectorXd::Zero(kDirections);
    bounds.upper = Eigen::VectorXd::Constant(kDirections, params_.cycle_budget);
    return bounds;
}

std::vector<double> TrafficScenario::system_observation() const {
    std::vector<double> reds;
    for (int v = 0; v < kNodes; ++v)
        for (int d = 0; d < kDirections; ++d)
            if (lane_exists(v, d))
                reds.push_back(params_.cycle_budget - green_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)]);
    return reds;
}

std::vector<double> TrafficScenario::environment_observation() const {
    std::vector<double> queues;
    for (int v = 0; v < kNodes; ++v)
        for (int d = 0; d < kDirections; ++d)
            if (lane_exists(v, d))
                queues.push_back(static_cast<double>(queue_[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)].size()));
    return queues;
}

metrics::HistogramSpec TrafficScenario::system_histogram() const {
    // One bin per integer red time 0..budget.
    return {params_.cycle_budget + 1, 0.0, static_cast<double>(params_.cycle_budget + 1)};
}

metrics::HistogramSpec TrafficScenario::environment_histogram() const {
    // One bin per integer queue length; longer queues clamp into the top bin.
    return {params_.queue_hist_max + 1, 0.0, static_cast<double>(params_.queue_hist_max + 1)};
}

int TrafficScenario::commuter_count() const {
    int n = 0;
    for (const Car& car : cars_)
        if (car.commuter && car.alive) ++n;
    return n;
}

int TrafficScenario::background_count() const {
    int n = 0;
    for (const Car& car : cars_)
        if (!car.commuter && car.alive) ++n;
    return n;
}

std::vector<std::pair<int, int>> TrafficScenario::commuter_trips() const {
    std::vector<std::pair<int, int>> trips;
    for (const Car& car : cars_)
        if (car.commuter) trips.emplace_back(car.origin, car.destination);
    return trips;
}

} // namespace saso::scenarios
