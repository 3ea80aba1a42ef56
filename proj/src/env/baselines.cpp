#include "reinfog/env/baselines.hpp"

#include <memory>
#include <random>

namespace reinfog::env {

Policy round_robin_policy() {
    auto next = std::make_shared<std::size_t>(0);
    return [next](const SchedulingEnv& env, std::span<const double>) { return (*next)++ % env.action_count(); };
}

Policy greedy_policy() {
    return [](const SchedulingEnv& env, std::span<const double>) {
        std::size_t best = 0;
        double best_reward = 0.0;
        for (std::size_t j = 0; j < env.action_count(); ++j) {
            const double r = compute_reward(env.preview(j), env.reward_spec());
            if (j == 0 || r > best_reward) {
                best = j;
                best_reward = r;
            }
        }
        return best;
    };
}

Policy random_policy(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const SchedulingEnv& env, std::span<const double>) {
        return std::uniform_int_distribution<std::size_t>(0, env.action_count() - 1)(*rng);
    };
}

EpisodeResult baseline_round_robin(const ClusterSpec& cluster, const std::vector<AppDag>& workload,
                                   const RewardSpec& reward, Endpoint origin) {
    return run_episode(cluster, workload, round_robin_policy(), reward, origin);
}

EpisodeResult baseline_greedy(const ClusterSpec& cluster, const std::vector<AppDag>& workload,
                              const RewardSpec& reward, Endpoint origin) {
    return run_episode(cluster, workload, greedy_policy(), reward, origin);
}

EpisodeResult baseline_random(const ClusterSpec& cluster, const std::vector<AppDag>& workload,
                              const RewardSpec& reward, std::uint64_t seed, Endpoint origin) {
    return run_episode(cluster, workload, random_policy(seed), reward, origin);
}

RewardSpec make_reward_spec(const ClusterSpec& cluster, const std::vector<AppDag>& workload, RewardMetric metric,
                            double failure_penalty, Endpoint origin) {
    const EpisodeResult rr = baseline_round_robin(cluster, workload, RewardSpec{}, origin);
    RewardSpec spec;
    spec.metric = metric;
    spec.failure_penalty = failure_penalty;
    spec.baseline_rt = rr.response_time;
    spec.baseline_ec = rr.energy;
    spec.validate();
    return spec;
}

}  // namespace reinfog::env
