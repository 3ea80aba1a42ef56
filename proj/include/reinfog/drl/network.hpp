#pragma once

// Feed-forward MLP used as the Q-network. Hidden layers apply the configured
// activation; the output layer is linear.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace reinfog::drl {

using Rng = std::mt19937_64;

enum class Activation { relu, tanh };

std::string to_string(Activation act);
Activation activation_from_string(const std::string& text);

/// Hidden sizes of the full-scale preset and the desk-scale default.
inline const std::vector<std::size_t> kWideHiddenLayers{256, 256, 128};
inline const std::vector<std::size_t> kDefaultHiddenLayers{64, 64, 32};

struct NetworkParams {
    std::vector<std::size_t> layer_sizes;  ///< input, hidden..., output
    std::vector<std::vector<double>> weights;  ///< per layer, row-major [out][in]
    std::vector<std::vector<double>> biases;   ///< per layer, [out]
    Activation activation = Activation::relu;

    std::size_t input_size() const { return layer_sizes.front(); }
    std::size_t output_size() const { return layer_sizes.back(); }
    std::size_t layer_count() const { return weights.size(); }
    std::size_t parameter_count() const;

    /// Throws std::invalid_argument on inconsistent shapes or non-finite entries.
    void validate() const;

    bool operator==(const NetworkParams&) const = default;
};

/// Glorot-uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases.
NetworkParams make_network(std::vector<std::size_t> layer_sizes, Activation act, Rng& rng);

/// All weights and biases zero, same shapes as `shape`.
NetworkParams zeros_like(const NetworkParams& shape);

std::vector<double> forward(const NetworkParams& net, std::span<const double> input);

/// Activations kept for backpropagation: `values[l]` is the input of layer l
/// (values[0] is the network input), `values.back()` is the output.
struct ForwardCache {
    std::vector<std::vector<double>> values;
    std::vector<std::vector<double>> pre_activations;

    const std::vector<double>& output() const { return values.back(); }
};

ForwardCache forward_cached(const NetworkParams& net, std::span<const double> input);

/// Accumulates d(loss)/d(params) into `grads` given d(loss)/d(output).
void backward(const NetworkParams& net, const ForwardCache& cache, std::span<const double> output_grad,
              NetworkParams& grads);

}  // namespace reinfog::drl
