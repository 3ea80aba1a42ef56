#include "reinfog/drl/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace reinfog::drl {

std::string to_string(OptimizerKind kind) { return kind == OptimizerKind::sgd ? "sgd" : "adam"; }

OptimizerKind optimizer_from_string(const std::string& text) {
    if (text == "sgd") return OptimizerKind::sgd;
    if (text == "adam") return OptimizerKind::adam;
    throw std::invalid_argument("unknown optimizer: " + text);
}

Optimizer::Optimizer(OptimizerConfig cfg) : cfg_(cfg) {
    if (!(cfg_.learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
}

void Optimizer::step(NetworkParams& params, const NetworkParams& grads) {
    ++steps_;
    const double lr = cfg_.learning_rate;
    if (cfg_.kind == OptimizerKind::sgd) {
        for (std::size_t l = 0; l < params.layer_count(); ++l) {
            for (std::size_t k = 0; k < params.weights[l].size(); ++k) params.weights[l][k] -= lr * grads.weights[l][k];
            for (std::size_t k = 0; k < params.biases[l].size(); ++k) params.biases[l][k] -= lr * grads.biases[l][k];
        }
        return;
    }

    if (first_moment_.layer_sizes != params.layer_sizes) {
        first_moment_ = zeros_like(params);
        second_moment_ = zeros_like(params);
    }
    const double b1 = cfg_.beta1;
    const double b2 = cfg_.beta2;
    const double correction1 = 1.0 - std::pow(b1, static_cast<double>(steps_));
    const double correction2 = 1.0 - std::pow(b2, static_cast<double>(steps_));
    auto update = [&](std::vector<double>& p, const std::vector<double>& g, std::vector<double>& m,
                      std::vector<double>& v) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            m[k] = b1 * m[k] + (1.0 - b1) * g[k];
            v[k] = b2 * v[k] + (1.0 - b2) * g[k] * g[k];
            const double m_hat = m[k] / correction1;
            const double v_hat = v[k] / correction2;
            p[k] -= lr * m_hat / (std::sqrt(v_hat) + cfg_.epsilon);
        }
    };
    for (std::size_t l = 0; l < params.layer_count(); ++l) {
        update(params.weights[l], grads.weights[l], first_moment_.weights[l], second_moment_.weights[l]);
        update(params.biases[l], grads.biases[l], first_moment_.biases[l], second_moment_.biases[l]);
    }
}

}  // namespace reinfog::drl
