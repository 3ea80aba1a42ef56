#include "reinfog/drl/network.hpp"

#include <cmath>
#include <stdexcept>

namespace reinfog::drl {

namespace {

double activate(Activation act, double z) { return act == Activation::relu ? (z > 0.0 ? z : 0.0) : std::tanh(z); }

// Derivative expressed through the pre-activation z and the activation a.
double activate_grad(Activation act, double z, double a) {
    return act == Activation::relu ? (z > 0.0 ? 1.0 : 0.0) : 1.0 - a * a;
}

void check_input(const NetworkParams& net, std::span<const double> input) {
    if (net.layer_sizes.empty() || input.size() != net.input_size())
        throw std::invalid_argument("network input has " + std::to_string(input.size()) + " features, expected " +
                                    std::to_string(net.layer_sizes.empty() ? 0 : net.input_size()));
}

}  // namespace

std::string to_string(Activation act) { return act == Activation::relu ? "relu" : "tanh"; }

Activation activation_from_string(const std::string& text) {
    if (text == "relu") return Activation::relu;
    if (text == "tanh") return Activation::tanh;
    throw std::invalid_argument("unknown activation: " + text);
}

std::size_t NetworkParams::parameter_count() const {
    std::size_t total = 0;
    for (std::size_t l = 0; l < weights.size(); ++l) total += weights[l].size() + biases[l].size();
    return total;
}

void NetworkParams::validate() const {
    if (layer_sizes.size() < 2) throw std::invalid_argument("network needs at least input and output layers");
    for (std::size_t s : layer_sizes)
        if (s == 0) throw std::invalid_argument("network layer sizes must be positive");
    if (weights.size() != layer_sizes.size() - 1 || biases.size() != weights.size())
        throw std::invalid_argument("network layer count does not match layer_sizes");
    for (std::size_t l = 0; l < weights.size(); ++l) {
        if (weights[l].size() != layer_sizes[l] * layer_sizes[l + 1])
            throw std::invalid_argument("weight matrix " + std::to_string(l) + " has the wrong shape");
        if (biases[l].size() != layer_sizes[l + 1])
            throw std::invalid_argument("bias vector " + std::to_string(l) + " has the wrong shape");
        for (double w : weights[l])
            if (!std::isfinite(w)) throw std::invalid_argument("non-finite network weight");
        for (double b : biases[l])
            if (!std::isfinite(b)) throw std::invalid_argument("non-finite network bias");
    }
}

NetworkParams make_network(std::vector<std::size_t> layer_sizes, Activation act, Rng& rng) {
    NetworkParams net;
    net.layer_sizes = std::move(layer_sizes);
    net.activation = act;
    if (net.layer_sizes.size() < 2) throw std::invalid_argument("network needs at least input and output layers");
    for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
        const std::size_t fan_in = net.layer_sizes[l];
        const std::size_t fan_out = net.layer_sizes[l + 1];
        const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        std::uniform_real_distribution<double> dist(-limit, limit);
        std::vector<double> w(fan_in * fan_out);
        for (auto& x : w) x = dist(rng);
        net.weights.push_back(std::move(w));
        net.biases.emplace_back(fan_out, 0.0);
    }
    net.validate();
    return net;
}

NetworkParams zeros_like(const NetworkParams& shape) {
    NetworkParams z = shape;
    for (auto& w : z.weights) std::fill(w.begin(), w.end(), 0.0);
    for (auto& b : z.biases) std::fill(b.begin(), b.end(), 0.0);
    return z;
}

ForwardCache forward_cached(const NetworkParams& net, std::span<const double> input) {
    check_input(net, input);
    ForwardCache cache;
    cache.values.emplace_back(input.begin(), input.end());
    const std::size_t layers = net.layer_count();
    for (std::size_t l = 0; l < layers; ++l) {
        const std::size_t in = net.layer_sizes[l];
        const std::size_t out = net.layer_sizes[l + 1];
        const auto& x = cache.values.back();
        const auto& w = net.weights[l];
        std::vector<double> z(net.biases[l]);
        for (std::size_t o = 0; o < out; ++o) {
            const double* row = w.data() + o * in;
            double acc = 0.0;
            for (std::size_t i = 0; i < in; ++i) acc += row[i] * x[i];
            z[o] += acc;
        }
        std::vector<double> a(z);
        if (l + 1 < layers)
            for (auto& v : a) v = activate(net.activation, v);
        cache.pre_activations.push_back(std::move(z));
        cache.values.push_back(std::move(a));
    }
    return cache;
}

std::vector<double> forward(const NetworkParams& net, std::span<const double> input) {
    return forward_cached(net, input).values.back();
}

void backward(const NetworkParams& net, const ForwardCache& cache, std::span<const double> output_grad,
              NetworkParams& grads) {
    if (output_grad.size() != net.output_size()) throw std::invalid_argument("output gradient has the wrong size");
    std::vector<double> delta(output_grad.begin(), output_grad.end());
    for (std::size_t l = net.layer_count(); l-- > 0;) {
        const std::size_t in = net.layer_sizes[l];
        const std::size_t out = net.layer_sizes[l + 1];
        if (l + 1 < net.layer_count()) {
            const auto& z = cache.pre_activations[l];
            const auto& a = cache.values[l + 1];
            for (std::size_t o = 0; o < out; ++o) delta[o] *= activate_grad(net.activation, z[o], a[o]);
        }
        const auto& x = cache.values[l];
        auto& gw = grads.weights[l];
        auto& gb = grads.biases[l];
        const auto& w = net.weights[l];
        std::vector<double> prev(in, 0.0);
        for (std::size_t o = 0; o < out; ++o) {
            const double d = delta[o];
            if (d == 0.0) continue;
            gb[o] += d;
            double* grow = gw.data() + o * in;
            const double* wrow = w.data() + o * in;
            for (std::size_t i = 0; i < in; ++i) {
                grow[i] += d * x[i];
                prev[i] += d * wrow[i];
            }
        }
        delta = std::move(prev);
    }
}

}  // namespace reinfog::drl
