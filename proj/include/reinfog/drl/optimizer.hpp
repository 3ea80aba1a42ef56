#pragma once

#include <cstdint>
#include <string>

#include "reinfog/drl/network.hpp"

namespace reinfog::drl {

enum class OptimizerKind { sgd, adam };

std::string to_string(OptimizerKind kind);
OptimizerKind optimizer_from_string(const std::string& text);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::adam;
    double learning_rate = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Gradient-descent step over NetworkParams-shaped gradients. Adam moments are
/// allocated lazily to match the first parameter set stepped.
class Optimizer {
public:
    explicit Optimizer(OptimizerConfig cfg = {});

    void step(NetworkParams& params, const NetworkParams& grads);

    const OptimizerConfig& config() const noexcept { return cfg_; }
    std::uint64_t steps() const noexcept { return steps_; }

private:
    OptimizerConfig cfg_;
    std::uint64_t steps_ = 0;
    NetworkParams first_moment_;
    NetworkParams second_moment_;
};

}  // namespace reinfog::drl
