#include "reinfog/drl/dqn.hpp"

#include <algorithm>
#include <stdexcept>

namespace reinfog::drl {

void DqnConfig::validate() const {
    if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("discount gamma must be in [0, 1]");
    if (batch_size == 0) throw std::invalid_argument("batch_size must be >= 1");
    if (target_sync_interval == 0) throw std::invalid_argument("target_sync_interval must be >= 1");
    if (replay_capacity < batch_size) throw std::invalid_argument("replay_capacity must be >= batch_size");
}

OptimizerConfig DqnConfig::optimizer_config() const {
    return OptimizerConfig{optimizer, learning_rate, adam_beta1, adam_beta2, adam_epsilon};
}

double dqn_target(double reward, double gamma, double q_next_max, bool done) {
    return done ? reward : reward + gamma * q_next_max;
}

LossGradient dqn_loss_gradient(const NetworkParams& net, const NetworkParams& target,
                               std::span<const Experience> batch, double gamma) {
    if (batch.empty()) throw std::invalid_argument("dqn update needs a non-empty batch");
    if (target.layer_sizes != net.layer_sizes) throw std::invalid_argument("target network shape mismatch");

    LossGradient out{0.0, zeros_like(net)};
    const double scale = 1.0 / static_cast<double>(batch.size());
    std::vector<double> output_grad(net.output_size(), 0.0);
    for (const auto& exp : batch) {
        if (exp.state.size() != net.input_size() || exp.next_state.size() != net.input_size())
            throw std::invalid_argument("experience state size does not match the network input");
        if (exp.action >= net.output_size()) throw std::invalid_argument("experience action out of range");

        double next_max = 0.0;
        if (!exp.done) {
            const auto q_next = forward(target, exp.next_state);
            next_max = *std::max_element(q_next.begin(), q_next.end());
        }
        const double y = dqn_target(exp.reward, gamma, next_max, exp.done);
        const auto cache = forward_cached(net, exp.state);
        const double err = cache.output()[exp.action] - y;
        out.loss += scale * err * err;

        std::fill(output_grad.begin(), output_grad.end(), 0.0);
        output_grad[exp.action] = 2.0 * scale * err;
        backward(net, cache, output_grad, out.gradient);
    }
    return out;
}

double dqn_update(NetworkParams& net, const NetworkParams& target, std::span<const Experience> batch, double gamma,
                  Optimizer& optimizer) {
    auto lg = dqn_loss_gradient(net, target, batch, gamma);
    optimizer.step(net, lg.gradient);
    return lg.loss;
}

NetworkParams sync_target(const NetworkParams& net) { return net; }

DqnAgent::DqnAgent(std::size_t state_size, std::size_t action_count, const DqnConfig& cfg, Rng& init_rng)
    : cfg_(cfg), optimizer_(cfg.optimizer_config()) {
    cfg_.validate();
    std::vector<std::size_t> sizes{state_size};
    sizes.insert(sizes.end(), cfg_.hidden_layers.begin(), cfg_.hidden_layers.end());
    sizes.push_back(action_count);
    online_ = make_network(std::move(sizes), cfg_.activation, init_rng);
    target_ = sync_target(online_);
}

DqnAgent::DqnAgent(NetworkParams initial, const DqnConfig& cfg)
    : cfg_(cfg), online_(std::move(initial)), optimizer_(cfg.optimizer_config()) {
    cfg_.validate();
    online_.validate();
    target_ = sync_target(online_);
}

double DqnAgent::train(std::span<const Experience> batch) {
    const double loss = dqn_update(online_, target_, batch, cfg_.gamma, optimizer_);
    ++updates_;
    if (updates_ % cfg_.target_sync_interval == 0) target_ = sync_target(online_);
    return loss;
}

}  // namespace reinfog::drl
