#pragma once

#include <cstdint>
#include <vector>

#include "reinfog/core/dag.hpp"
#include "reinfog/env/cluster.hpp"
#include "reinfog/env/environment.hpp"
#include "reinfog/env/reward.hpp"

namespace reinfog::env {

/// Cycles node indices 0, 1, ..., n-1, 0, ... across all decisions.
Policy round_robin_policy();
/// Node with the highest reward for the pending task (lowest index on ties).
Policy greedy_policy();
/// Uniform node choice from a private generator seeded with `seed`.
Policy random_policy(std::uint64_t seed);

EpisodeResult baseline_round_robin(const ClusterSpec& cluster, const std::vector<AppDag>& workload,
                                   const RewardSpec& reward = {}, Endpoint origin = kUser);
EpisodeResult baseline_greedy(const ClusterSpec& cluster, const std::vector<AppDag>& workload,
                              const RewardSpec& reward, Endpoint origin = kUser);
EpisodeResult baseline_random(const ClusterSpec& cluster, const std::vector<AppDag>& workload,
                              const RewardSpec& reward, std::uint64_t seed, Endpoint origin = kUser);

/// Reward spec whose normalization baselines are the round-robin totals.
RewardSpec make_reward_spec(const ClusterSpec& cluster, const std::vector<AppDag>& workload,
                            RewardMetric metric = RewardMetric::weighted_cost,
                            double failure_penalty = kDefaultFailurePenalty, Endpoint origin = kUser);

}  // namespace reinfog::env
