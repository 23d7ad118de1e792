#pragma once

#include "saso/core/types.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace saso {

// Dense per-agent history of configuration vectors. Every agent contributes
// exactly one sample per tick; a tick becomes visible (the horizon advances)
// once all agents have recorded it. Agents are identified by index
// 0..agent_count-1.
//
// Writes are single-writer; once a tick is sealed the data for it never
// changes, so concurrent readers are safe.
class ConfigurationSeries {
public:
    ConfigurationSeries(Eigen::Index dimension, std::size_t agent_count);

    Eigen::Index dimension() const { return dimension_; }
    std::size_t agent_count() const { return agent_count_; }

    // Latest fully recorded tick; -1 while no tick is complete.
    Tick horizon() const { return static_cast<Tick>(sealed_.size()) - 1; }

    // Store one sample. `tick` must be the horizon's successor layer (samples
    // for a new tick may arrive in any agent order). Rejects dimension
    // mismatches, non-finite values and duplicate (tick, agent) pairs.
    void record(Tick tick, std::size_t agent, const Eigen::Ref<const ConfigurationVector>& value);

    // All agents' configurations at a sealed tick, one column per agent.
    const Eigen::MatrixXd& population_at(Tick tick) const;

    // One agent's configuration at a sealed tick.
    ConfigurationVector value_at(Tick tick, std::size_t agent) const;

    // One agent's samples over a window, one column per tick in tick order.
    Eigen::MatrixXd slice(const Window& window, std::size_t agent) const;

    // All agents' samples over a window, tick-major: for each tick, one
    // column per agent. The result has window.length * agent_count columns.
    Eigen::MatrixXd slice(const Window& window) const;

private:
    void check_window(const Window& window) const;

    Eigen::Index dimension_;
    std::size_t agent_count_;
    std::vector<Eigen::MatrixXd> sealed_;   // one dimension x agent_count matrix per tick
    Eigen::MatrixXd pending_;
    std::vector<bool> pending_filled_;
    std::size_t pending_count_ = 0;
};

} // namespace saso
