#pragma once

// Scheduling environment: one decision per task, applications in release
// order and tasks in topological order. Every commit re-simulates the
// committed tasks, so rewards reflect the shared node queues.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "reinfog/core/dag.hpp"
#include "reinfog/core/metrics.hpp"
#include "reinfog/env/cluster.hpp"
#include "reinfog/env/reward.hpp"
#include "reinfog/env/simulator.hpp"
#include "reinfog/env/state.hpp"

namespace reinfog::env {

struct EpisodeResult {
    std::vector<int> app_ids;
    std::vector<ScheduleConfig> schedules;  ///< aligned with app_ids
    double response_time = 0.0;
    double energy = 0.0;
    double weighted_cost = 0.0;
    std::vector<double> rewards;  ///< one per decision
    std::vector<std::size_t> actions;
    std::size_t failures = 0;  ///< tasks whose record is unsuccessful

    bool operator==(const EpisodeResult&) const = default;
};

struct StepResult {
    double reward = 0.0;
    StepOutcome outcome;
    bool done = false;
};

class SchedulingEnv {
public:
    SchedulingEnv(ClusterSpec cluster, std::vector<AppDag> workload, RewardSpec reward, Endpoint origin = kUser);

    void reset();
    bool done() const noexcept { return cursor_ == order_.size(); }

    std::size_t action_count() const noexcept { return cluster_.node_count(); }
    std::size_t state_size() const noexcept { return env::state_size(cluster_.node_count()); }
    std::size_t decision_count() const noexcept { return order_.size(); }

    /// (application index, task index) of the next decision.
    std::pair<std::size_t, std::size_t> pending() const;

    /// Encoded state for the pending task; all zeros once done.
    std::vector<double> observe() const;

    /// Totals change and success if the pending task were placed on `node`.
    StepOutcome preview(std::size_t node) const;

    StepResult step(std::size_t node);

    /// Throws std::logic_error before the episode is done.
    EpisodeResult result() const;

    const ClusterSpec& cluster() const noexcept { return cluster_; }
    const std::vector<AppDag>& workload() const noexcept { return workload_; }
    const RewardSpec& reward_spec() const noexcept { return reward_; }
    const std::vector<ScheduleConfig>& schedules() const noexcept { return schedules_; }

private:
    struct Totals {
        std::vector<ScheduleConfig> schedules;
        double rt = 0.0;
        double ec = 0.0;
    };

    Totals evaluate(const Mapping& mapping) const;
    double earliest_inputs(std::size_t app, std::size_t task) const;

    ClusterSpec cluster_;
    std::vector<AppDag> workload_;
    RewardSpec reward_;
    Endpoint origin_;
    FeatureScales scales_;
    std::vector<std::pair<std::size_t, std::size_t>> order_;

    std::size_t cursor_ = 0;
    Mapping mapping_;
    std::vector<ScheduleConfig> schedules_;
    double rt_ = 0.0;
    double ec_ = 0.0;
    std::vector<double> rewards_;
    std::vector<std::size_t> actions_;
};

/// Decision rule: receives the environment and the encoded state, returns a node.
using Policy = std::function<std::size_t(const SchedulingEnv&, std::span<const double>)>;

EpisodeResult run_episode(SchedulingEnv& env, const Policy& policy);
EpisodeResult run_episode(const ClusterSpec& cluster, const std::vector<AppDag>& workload, const Policy& policy,
                          const RewardSpec& reward, Endpoint origin = kUser);

}  // namespace reinfog::env
