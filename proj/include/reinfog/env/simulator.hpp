#pragma once

// Discrete-event execution of DAG applications on a cluster. Nodes run one
// task at a time, picking the earliest-ready waiting task (ties by task id,
// then application). Applications share node queues.

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "reinfog/core/dag.hpp"
#include "reinfog/core/metrics.hpp"
#include "reinfog/env/cluster.hpp"

namespace reinfog::env {

inline constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

/// mapping[app][task index] = node index, or kUnassigned for tasks not yet
/// committed. The committed tasks of each application must be closed under
/// predecessors.
using Mapping = std::vector<std::vector<std::size_t>>;

/// Memory a task holds on its node while running: its input plus its output.
double task_footprint(const Task& t);

/// Schedules every committed task; records follow task index order and omit
/// uncommitted tasks.
std::vector<ScheduleConfig> simulate_workload(const ClusterSpec& cluster, std::span<const AppDag> apps,
                                              const Mapping& mapping, Endpoint origin = kUser);

/// Single application with every task placed.
ScheduleConfig simulate_schedule(const ClusterSpec& cluster, const AppDag& dag,
                                 const std::vector<std::size_t>& choices, Endpoint origin = kUser);

}  // namespace reinfog::env
