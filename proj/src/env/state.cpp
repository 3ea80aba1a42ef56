#include "reinfog/env/state.hpp"

#include <algorithm>
#include <stdexcept>

#include "reinfog/env/simulator.hpp"

namespace reinfog::env {

namespace {

double unit(double value, double scale) { return scale > 0.0 ? std::clamp(value / scale, 0.0, 1.0) : 0.0; }

}  // namespace

FeatureScales feature_scales(const ClusterSpec& cluster, std::span<const AppDag> apps) {
    FeatureScales s{0.0, 0.0, 0.0, 0.0, 0.0};
    double capacity = 0.0;
    for (const auto& nd : cluster.nodes()) capacity += nd.compute_cap;
    double total_compute = 0.0;
    for (const auto& dag : apps) {
        for (std::size_t i = 0; i < dag.size(); ++i) {
            const Task& t = dag.task(i);
            s.compute_req = std::max(s.compute_req, t.compute_req);
            s.input_size = std::max(s.input_size, t.input_size);
            s.output_size = std::max(s.output_size, t.output_size);
            s.out_degree = std::max(s.out_degree, static_cast<double>(dag.successors_of(i).size()));
            total_compute += t.compute_req;
        }
    }
    s.backlog_s = capacity > 0.0 ? total_compute / capacity : 0.0;
    return s;
}

SimState sim_state_at(const ClusterSpec& cluster, std::span<const AppDag> apps,
                      std::span<const ScheduleConfig> scheds, double now) {
    if (apps.size() != scheds.size()) throw std::invalid_argument("one schedule per application is required");
    SimState sim;
    sim.now = now;
    sim.nodes.assign(cluster.node_count(), NodeLoad{});
    for (std::size_t a = 0; a < apps.size(); ++a) {
        for (const auto& rec : scheds[a].records) {
            NodeLoad& load = sim.nodes.at(rec.node);
            load.free_at = std::max(load.free_at, rec.finish);
            if (rec.start <= now && now < rec.finish)
                load.mem_in_use += task_footprint(apps[a].task(apps[a].index_of(rec.task_id)));
        }
    }
    return sim;
}

std::vector<double> encode_state(const ClusterSpec& cluster, const SimState& sim, const Task& pending,
                                 std::size_t out_degree, const FeatureScales& scales) {
    if (sim.nodes.size() != cluster.node_count()) throw std::invalid_argument("node loads do not match the cluster");
    std::vector<double> x;
    x.reserve(state_size(cluster.node_count()));
    for (std::size_t j = 0; j < cluster.node_count(); ++j) {
        const Node& nd = cluster.node(j);
        const NodeLoad& load = sim.nodes[j];
        const bool idle = load.free_at <= sim.now;
        x.push_back(idle ? unit(nd.compute_cap, cluster.max_compute_cap()) : 0.0);
        x.push_back(unit(nd.mem_avail - load.mem_in_use, cluster.max_mem_avail()));
        x.push_back(unit(load.free_at - sim.now, scales.backlog_s));
    }
    x.push_back(unit(pending.compute_req, scales.compute_req));
    x.push_back(unit(pending.input_size, scales.input_size));
    x.push_back(unit(pending.output_size, scales.output_size));
    x.push_back(unit(static_cast<double>(out_degree), scales.out_degree));
    return x;
}

std::size_t decode_action(std::int64_t raw, std::size_t node_count) {
    if (raw < 0 || static_cast<std::uint64_t>(raw) >= node_count) throw std::out_of_range("invalid action");
    return static_cast<std::size_t>(raw);
}

}  // namespace reinfog::env
