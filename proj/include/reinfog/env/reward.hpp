#pragma once

#include <string>

namespace reinfog::env {

enum class RewardMetric { response_time, energy, weighted_cost };

std::string to_string(RewardMetric metric);
RewardMetric reward_metric_from_string(const std::string& text);

inline constexpr double kDefaultFailurePenalty = -2.0;

struct RewardSpec {
    RewardMetric metric = RewardMetric::weighted_cost;
    double failure_penalty = kDefaultFailurePenalty;
    double baseline_rt = 1.0;
    double baseline_ec = 1.0;
    double w1 = 0.5;
    double w2 = 0.5;

    /// Throws std::invalid_argument on a non-negative penalty, non-positive
    /// baselines or weights that are negative or do not sum to 1.
    void validate() const;
};

/// Change in the episode totals caused by committing one task.
struct StepOutcome {
    double delta_rt = 0.0;
    double delta_ec = 0.0;
    bool success = true;
};

/// failure_penalty on failure, otherwise minus the normalized metric change.
/// Summed over a failure-free episode this is minus the episode's metric.
double compute_reward(const StepOutcome& outcome, const RewardSpec& spec);

}  // namespace reinfog::env
