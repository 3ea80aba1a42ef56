#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reinfog/drl/network.hpp"

namespace reinfog::drl {

/// Lowest index among the maxima.
std::size_t argmax(std::span<const double> values);

/// Uniform random action with probability epsilon, otherwise argmax.
std::size_t eps_greedy(std::span<const double> q_values, double epsilon, Rng& rng);

/// Linear decay from `start` to `end` over `decay_steps` decisions, then flat.
struct EpsilonSchedule {
    double start = 1.0;
    double end = 0.05;
    std::uint64_t decay_steps = 5000;

    double at(std::uint64_t step) const;
};

struct OuNoiseState {
    double mu = 0.0;
    double theta = 0.15;
    double sigma = 0.2;
    double dt = 1.0;
    std::vector<double> x;

    /// Throws std::invalid_argument unless theta > 0, dt > 0, sigma >= 0.
    void validate() const;
};

/// x <- x + theta (mu - x) dt + sigma sqrt(dt) z. Returns the new state and the sample.
std::pair<OuNoiseState, std::vector<double>> ou_step(OuNoiseState state, Rng& rng);

enum class ExplorationKind { epsilon_greedy, ornstein_uhlenbeck };

std::string to_string(ExplorationKind kind);
ExplorationKind exploration_from_string(const std::string& text);

/// Pluggable exploration for discrete actions. Epsilon-greedy follows the
/// schedule; OU perturbs Q-values with temporally correlated noise.
class ExplorationEngine {
public:
    ExplorationEngine() = default;
    ExplorationEngine(ExplorationKind kind, EpsilonSchedule schedule, OuNoiseState ou = {});

    std::size_t select(std::span<const double> q_values, Rng& rng);

    /// Exploration rate that applies to the next decision.
    double current_epsilon() const { return schedule_.at(decisions_); }
    std::uint64_t decisions() const noexcept { return decisions_; }
    ExplorationKind kind() const noexcept { return kind_; }

private:
    ExplorationKind kind_ = ExplorationKind::epsilon_greedy;
    EpsilonSchedule schedule_;
    OuNoiseState ou_;
    std::uint64_t decisions_ = 0;
};

}  // namespace reinfog::drl
