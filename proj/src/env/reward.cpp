#include "reinfog/env/reward.hpp"

#include <cmath>
#include <stdexcept>

namespace reinfog::env {

std::string to_string(RewardMetric metric) {
    switch (metric) {
        case RewardMetric::response_time: return "response_time";
        case RewardMetric::energy: return "energy";
        case RewardMetric::weighted_cost: return "weighted_cost";
    }
    return "unknown";
}

RewardMetric reward_metric_from_string(const std::string& text) {
    if (text == "response_time" || text == "rt") return RewardMetric::response_time;
    if (text == "energy" || text == "ec") return RewardMetric::energy;
    if (text == "weighted_cost" || text == "wc") return RewardMetric::weighted_cost;
    throw std::invalid_argument("unknown reward metric: " + text);
}

void RewardSpec::validate() const {
    if (!(failure_penalty < 0.0)) throw std::invalid_argument("failure_penalty must be < 0");
    if (!(baseline_rt > 0.0) || !(baseline_ec > 0.0)) throw std::invalid_argument("reward baselines must be > 0");
    if (w1 < 0.0 || w2 < 0.0 || std::abs(w1 + w2 - 1.0) > 1e-9)
        throw std::invalid_argument("reward weights must be non-negative and sum to 1");
}

double compute_reward(const StepOutcome& outcome, const RewardSpec& spec) {
    if (!outcome.success) return spec.failure_penalty;
    switch (spec.metric) {
        case RewardMetric::response_time: return -(outcome.delta_rt / spec.baseline_rt);
        case RewardMetric::energy: return -(outcome.delta_ec / spec.baseline_ec);
        case RewardMetric::weighted_cost: break;
    }
    return -(spec.w1 * (outcome.delta_rt / spec.baseline_rt) + spec.w2 * (outcome.delta_ec / spec.baseline_ec));
}

}  // namespace reinfog::env
