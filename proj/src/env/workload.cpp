#include "reinfog/env/workload.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace reinfog::env {

void WorkloadSpec::validate() const {
    if (app_count < 1 || tasks_per_app < 1 || layers < 1)
        throw std::invalid_argument("workload needs at least one application, task and layer");
    if (edge_density < 0.0 || edge_density > 1.0) throw std::invalid_argument("edge_density must be in [0, 1]");
    if (!(compute_min > 0.0) || compute_max < compute_min)
        throw std::invalid_argument("compute range must be positive and ordered");
    if (input_min < 0.0 || input_max < input_min || output_min < 0.0 || output_max < output_min)
        throw std::invalid_argument("size ranges must be non-negative and ordered");
    if (arrival_rate < 0.0) throw std::invalid_argument("arrival_rate must be >= 0");
}

WorkloadSpec reference_workload_spec() {
    WorkloadSpec spec;
    spec.app_count = 20;
    spec.tasks_per_app = 3;
    spec.layers = 2;
    return spec;
}

std::vector<AppDag> generate_workload(const WorkloadSpec& spec, std::uint64_t seed) {
    spec.validate();
    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) { return lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng); };

    std::vector<AppDag> apps;
    double release = 0.0;
    for (std::size_t a = 0; a < spec.app_count; ++a) {
        if (spec.arrival_rate > 0.0 && a > 0) release += std::exponential_distribution<double>(spec.arrival_rate)(rng);

        const std::size_t k = spec.tasks_per_app;
        const std::size_t depth = std::min(spec.layers, k);
        std::vector<std::size_t> layer(k);
        for (std::size_t i = 0; i < k; ++i)
            layer[i] = i < depth ? i : std::uniform_int_distribution<std::size_t>(0, depth - 1)(rng);
        std::sort(layer.begin(), layer.end());

        std::vector<Task> tasks(k);
        for (std::size_t i = 0; i < k; ++i) {
            Task& t = tasks[i];
            t.id = static_cast<int>(i);
            t.compute_req = uniform(spec.compute_min, spec.compute_max);
            t.input_size = uniform(spec.input_min, spec.input_max);
            t.output_size = uniform(spec.output_min, spec.output_max);
            if (layer[i] == 0 || spec.edge_density == 0.0) continue;
            std::vector<int> previous;
            for (std::size_t p = 0; p < i; ++p)
                if (layer[p] + 1 == layer[i]) previous.push_back(static_cast<int>(p));
            for (int p : previous)
                if (std::bernoulli_distribution(spec.edge_density)(rng)) t.predecessors.push_back(p);
            if (t.predecessors.empty())
                t.predecessors.push_back(
                    previous[std::uniform_int_distribution<std::size_t>(0, previous.size() - 1)(rng)]);
        }
        apps.emplace_back(static_cast<int>(a), std::move(tasks), release);
    }
    return apps;
}

}  // namespace reinfog::env
