#pragma once

// Observation encoding and action decoding for the scheduling environment.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reinfog/core/dag.hpp"
#include "reinfog/core/metrics.hpp"
#include "reinfog/env/cluster.hpp"

namespace reinfog::env {

struct NodeLoad {
    double free_at = 0.0;     ///< when the node finishes its committed work
    double mem_in_use = 0.0;  ///< footprint of the task running at the observation time
};

struct SimState {
    std::vector<NodeLoad> nodes;
    double now = 0.0;
};

/// Divisors that map raw features into [0, 1] for one workload.
struct FeatureScales {
    double compute_req = 1.0;
    double input_size = 1.0;
    double output_size = 1.0;
    double out_degree = 1.0;
    double backlog_s = 1.0;  ///< run time of the whole workload spread over all nodes
};

FeatureScales feature_scales(const ClusterSpec& cluster, std::span<const AppDag> apps);

/// Node loads at time `now` implied by the scheduled tasks.
SimState sim_state_at(const ClusterSpec& cluster, std::span<const AppDag> apps,
                      std::span<const ScheduleConfig> scheds, double now);

inline std::size_t state_size(std::size_t node_count) { return 3 * node_count + 4; }

/// Per node: available compute (0 while busy), available memory, queue
/// backlog; then the pending task's compute, input, output and out-degree.
std::vector<double> encode_state(const ClusterSpec& cluster, const SimState& sim, const Task& pending,
                                 std::size_t out_degree, const FeatureScales& scales);

/// Throws std::out_of_range("invalid action") unless 0 <= raw < node_count.
std::size_t decode_action(std::int64_t raw, std::size_t node_count);

}  // namespace reinfog::env
