#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reinfog/core/dag.hpp"

namespace reinfog::env {

/// Layered random DAGs. Each non-source task draws an edge from every task in
/// the previous layer with probability `edge_density`, and keeps at least one
/// when the density is positive. Density 0 yields independent tasks.
struct WorkloadSpec {
    std::size_t app_count = 4;
    std::size_t tasks_per_app = 5;
    std::size_t layers = 3;
    double edge_density = 0.5;
    double compute_min = 100.0;  ///< mega-cycles
    double compute_max = 1000.0;
    double input_min = 1.0;  ///< MB
    double input_max = 10.0;
    double output_min = 1.0;
    double output_max = 10.0;
    /// Applications per second; 0 releases everything at time zero, otherwise
    /// inter-arrival gaps are exponential.
    double arrival_rate = 0.0;

    void validate() const;
};

/// Twenty small applications of three tasks each, all released at time zero.
WorkloadSpec reference_workload_spec();

std::vector<AppDag> generate_workload(const WorkloadSpec& spec, std::uint64_t seed);

}  // namespace reinfog::env
