#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reinfog/drl/experience.hpp"
#include "reinfog/drl/exploration.hpp"
#include "reinfog/drl/network.hpp"
#include "reinfog/drl/optimizer.hpp"

namespace reinfog::drl {

struct DqnConfig {
    double learning_rate = 0.01;
    double gamma = 0.99;
    EpsilonSchedule epsilon{};
    std::size_t batch_size = 32;
    std::size_t target_sync_interval = 100;  ///< updates between target copies
    std::size_t replay_capacity = 10000;
    OptimizerKind optimizer = OptimizerKind::adam;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    std::vector<std::size_t> hidden_layers = kDefaultHiddenLayers;
    Activation activation = Activation::relu;

    void validate() const;
    OptimizerConfig optimizer_config() const;
};

/// y = r + gamma * max_a' Q_target(s', a'), or r on terminal transitions.
double dqn_target(double reward, double gamma, double q_next_max, bool done);

struct LossGradient {
    double loss = 0.0;
    NetworkParams gradient;
};

/// Mean squared TD error over the batch and its gradient w.r.t. `net`.
LossGradient dqn_loss_gradient(const NetworkParams& net, const NetworkParams& target,
                               std::span<const Experience> batch, double gamma);

/// One optimizer step on the batch; returns the pre-step loss.
double dqn_update(NetworkParams& net, const NetworkParams& target, std::span<const Experience> batch, double gamma,
                  Optimizer& optimizer);

/// Independent deep copy of the online network.
NetworkParams sync_target(const NetworkParams& net);

/// Online network, target network and optimizer state under one config.
class DqnAgent {
public:
    DqnAgent(std::size_t state_size, std::size_t action_count, const DqnConfig& cfg, Rng& init_rng);
    DqnAgent(NetworkParams initial, const DqnConfig& cfg);

    /// Update on `batch`; copies online into target every target_sync_interval updates.
    double train(std::span<const Experience> batch);

    std::vector<double> q_values(std::span<const double> state) const { return forward(online_, state); }

    const NetworkParams& online() const noexcept { return online_; }
    const NetworkParams& target() const noexcept { return target_; }
    const DqnConfig& config() const noexcept { return cfg_; }
    std::uint64_t updates() const noexcept { return updates_; }

private:
    DqnConfig cfg_;
    NetworkParams online_;
    NetworkParams target_;
    Optimizer optimizer_;
    std::uint64_t updates_ = 0;
};

}  // namespace reinfog::drl
