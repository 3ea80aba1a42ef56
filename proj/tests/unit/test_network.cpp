#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "reinfog/drl/dqn.hpp"
#include "reinfog/drl/network.hpp"
#include "reinfog/drl/optimizer.hpp"
#include "reinfog/drl/policy_store.hpp"

using namespace reinfog::drl;

namespace {

double& param_at(NetworkParams& net, std::size_t layer, bool bias, std::size_t k) {
    return bias ? net.biases[layer][k] : net.weights[layer][k];
}

double rel_error(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-7}); }

}  // namespace

TEST_CASE("forward pass by hand") {
    NetworkParams net;
    net.layer_sizes = {2, 2, 1};
    net.weights = {{1.0, -1.0, 0.5, 0.5}, {2.0, -3.0}};
    net.biases = {{0.0, -1.0}, {0.25}};
    net.validate();
    // hidden: relu(1 - 2) = 0, relu(0.5 + 1 - 1) = 0.5; out = 0.25 + 2*0 - 3*0.5.
    CHECK(forward(net, std::vector<double>{1.0, 2.0}).front() == doctest::Approx(-1.25));
    net.activation = Activation::tanh;
    CHECK(forward(net, std::vector<double>{1.0, 2.0}).front() ==
          doctest::Approx(0.25 + 2 * std::tanh(-1.0) - 3 * std::tanh(0.5)));
    CHECK_THROWS_AS(forward(net, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("backprop matches central differences") {
    Rng rng(17);
    std::uniform_int_distribution<std::size_t> width(1, 6), depth(1, 3);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int probe = 0; probe < 60; ++probe) {
        std::vector<std::size_t> sizes{width(rng)};
        const std::size_t layers = depth(rng);
        for (std::size_t l = 0; l < layers; ++l) sizes.push_back(width(rng));
        auto net = make_network(sizes, probe % 2 ? Activation::tanh : Activation::relu, rng);
        for (auto& b : net.biases)
            for (auto& x : b) x = 0.1 * normal(rng);
        std::vector<double> input(sizes.front()), coef(sizes.back());
        for (auto& x : input) x = normal(rng);
        for (auto& c : coef) c = normal(rng);
        auto loss = [&](const NetworkParams& n) {
            auto out = forward(n, input);
            double s = 0.0;
            for (std::size_t k = 0; k < out.size(); ++k) s += coef[k] * out[k];
            return s;
        };
        auto grads = zeros_like(net);
        backward(net, forward_cached(net, input), coef, grads);
        const double h = 1e-6;
        for (std::size_t l = 0; l < net.layer_count(); ++l)
            for (bool bias : {false, true}) {
                const std::size_t count = bias ? net.biases[l].size() : net.weights[l].size();
                for (std::size_t k = 0; k < count; ++k) {
                    auto plus = net, minus = net;
                    param_at(plus, l, bias, k) += h;
                    param_at(minus, l, bias, k) -= h;
                    const double numeric = (loss(plus) - loss(minus)) / (2 * h);
                    const double analytic = param_at(grads, l, bias, k);
                    CHECK(rel_error(analytic, numeric) <= 1e-4);
                }
            }
    }
}

TEST_CASE("dqn loss gradient matches central differences") {
    Rng rng(23);
    auto net = make_network({3, 5, 2}, Activation::tanh, rng);
    auto target = make_network({3, 5, 2}, Activation::tanh, rng);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Experience> batch;
    for (int i = 0; i < 4; ++i)
        batch.push_back({{normal(rng), normal(rng), normal(rng)},
                         static_cast<std::size_t>(i % 2),
                         normal(rng),
                         {normal(rng), normal(rng), normal(rng)},
                         i == 3});
    auto lg = dqn_loss_gradient(net, target, batch, 0.9);
    auto loss_of = [&](const NetworkParams& n) { return dqn_loss_gradient(n, target, batch, 0.9).loss; };
    const double h = 1e-6;
    for (std::size_t l = 0; l < net.layer_count(); ++l)
        for (std::size_t k = 0; k < net.weights[l].size(); ++k) {
            auto plus = net, minus = net;
            plus.weights[l][k] += h;
            minus.weights[l][k] -= h;
            CHECK(rel_error(lg.gradient.weights[l][k], (loss_of(plus) - loss_of(minus)) / (2 * h)) <= 1e-4);
        }
}

TEST_CASE("td target") {
    CHECK(dqn_target(1.0, 0.9, 2.0, false) == doctest::Approx(2.8));
    CHECK(dqn_target(1.0, 0.9, 2.0, true) == 1.0);
}

TEST_CASE("optimizer steps by hand") {
    NetworkParams net;
    net.layer_sizes = {1, 1};
    net.weights = {{1.0}};
    net.biases = {{0.0}};
    auto g = zeros_like(net);
    g.weights[0][0] = 0.5;
    g.biases[0][0] = -2.0;

    auto sgd_net = net;
    Optimizer sgd({OptimizerKind::sgd, 0.1});
    sgd.step(sgd_net, g);
    CHECK(sgd_net.weights[0][0] == doctest::Approx(0.95));
    CHECK(sgd_net.biases[0][0] == doctest::Approx(0.2));

    // First Adam step moves each parameter by about lr against the gradient sign.
    Optimizer adam({OptimizerKind::adam, 0.01});
    adam.step(net, g);
    CHECK(net.weights[0][0] == doctest::Approx(1.0 - 0.01 * 0.5 / (0.5 + 1e-8)));
    CHECK(net.biases[0][0] == doctest::Approx(0.01 * 2.0 / (2.0 + 1e-8)));
    // Second step with the same gradient: m_hat = g, v_hat = g^2.
    adam.step(net, g);
    CHECK(net.weights[0][0] == doctest::Approx(1.0 - 0.02).epsilon(1e-9));
}

TEST_CASE("target network follows the sync interval") {
    Rng rng(3);
    DqnConfig cfg;
    cfg.hidden_layers = {4};
    cfg.target_sync_interval = 3;
    DqnAgent agent(2, 2, cfg, rng);
    std::vector<Experience> batch{{{1.0, 0.0}, 0, 1.0, {0.0, 1.0}, false}, {{0.0, 1.0}, 1, -1.0, {1.0, 0.0}, true}};
    const auto initial_target = agent.target();
    agent.train(batch);
    agent.train(batch);
    CHECK(agent.target() == initial_target);
    CHECK_FALSE(agent.online() == initial_target);
    agent.train(batch);
    CHECK(agent.target() == agent.online());
    CHECK(agent.updates() == 3);
}

TEST_CASE("training reduces the loss on a fixed batch") {
    Rng rng(8);
    auto net = make_network({2, 8, 2}, Activation::relu, rng);
    std::vector<Experience> batch{{{1.0, 0.0}, 0, 1.0, {0.0, 0.0}, true}, {{0.0, 1.0}, 1, -1.0, {0.0, 0.0}, true}};
    Optimizer opt({OptimizerKind::adam, 0.01});
    const double first = dqn_update(net, net, batch, 0.99, opt);
    double last = first;
    for (int i = 0; i < 300; ++i) last = dqn_update(net, net, batch, 0.99, opt);
    CHECK(last < 0.01 * first);
}

TEST_CASE("config validation") {
    DqnConfig cfg;
    cfg.gamma = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.replay_capacity = 8;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("policy files round trip exactly") {
    Rng rng(1);
    auto net = make_network({5, 7, 3}, Activation::tanh, rng);
    const auto path = std::filesystem::temp_directory_path() / "reinfog_policy_roundtrip.json";
    save_policy(net, path, {{"note", "x"}});
    auto stored = load_policy(path);
    CHECK(stored.network == net);
    CHECK(stored.metadata["note"] == "x");
    {
        std::ofstream(path) << R"({"format_version": "1", "layer_sizes": [2, 1], "weights": [[1.0]], "biases": [[0.0]]})";
        CHECK_THROWS_AS(load_policy(path), PolicyFormatError);
        std::ofstream(path) << "not json";
        CHECK_THROWS_AS(load_policy(path), PolicyFormatError);
    }
    std::filesystem::remove(path);
}
