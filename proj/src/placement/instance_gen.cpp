#include "reinfog/placement/instance_gen.hpp"

#include <random>
#include <vector>

namespace reinfog::placement {

PlacementInstance generate_instance(const InstanceSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto integer = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    const std::size_t m = spec.components;
    const std::size_t n = spec.nodes;

    std::vector<double> speed(n), memory(n), power(n);
    for (std::size_t j = 0; j < n; ++j) {
        speed[j] = 50.0 * static_cast<double>(1 << integer(0, 3));
        memory[j] = 256.0 * integer(1, 8);
        power[j] = integer(1, 5);
    }

    std::vector<double> compute(m), mem(m);
    std::vector<std::size_t> planted(m);
    for (std::size_t i = 0; i < m; ++i) {
        compute[i] = 10.0 * integer(2, 10);
        mem[i] = 64.0 * integer(1, 8);
        planted[i] = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
    }

    std::vector<double> load(n, 0.0), mem_load(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        load[planted[i]] += compute[i];
        mem_load[planted[i]] += mem[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        while (speed[j] < load[j]) speed[j] *= 2.0;
        if (memory[j] < mem_load[j]) memory[j] = mem_load[j];
    }

    std::vector<Node> nodes;
    for (std::size_t j = 0; j < n; ++j) nodes.emplace_back(static_cast<int>(j), speed[j], memory[j], power[j]);

    std::vector<Component> comps;
    for (std::size_t i = 0; i < m; ++i) {
        const double deadline = compute[i] / speed[planted[i]];
        const auto role = i < spec.learners ? ComponentRole::learner : ComponentRole::worker;
        comps.emplace_back(static_cast<int>(i), compute[i], mem[i], deadline, role);
    }
    return PlacementInstance(std::move(comps), std::move(nodes), spec.omega1, spec.omega2);
}

}  // namespace reinfog::placement
