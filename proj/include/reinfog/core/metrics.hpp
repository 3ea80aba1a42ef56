#pragma once

// Scheduling metrics: response time along critical paths, energy, weighted
// cost against a baseline, and grid emissions.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "reinfog/core/dag.hpp"

namespace reinfog {

/// Placement and timing of one task.
struct TaskRecord {
    int task_id = 0;
    std::size_t node = 0;
    double start = 0.0;
    double finish = 0.0;
    double energy = 0.0;
    bool success = true;

    bool operator==(const TaskRecord&) const = default;
};

/// Scheduling configuration of one application.
struct ScheduleConfig {
    double release = 0.0;
    std::vector<TaskRecord> records;

    /// nullptr when the task is not scheduled.
    const TaskRecord* find(int task_id) const;

    bool operator==(const ScheduleConfig&) const = default;
};

class IncompleteSchedule : public std::runtime_error {
public:
    IncompleteSchedule() : std::runtime_error("incomplete schedule") {}
};

/// Latest finish minus release. Throws IncompleteSchedule.
double makespan(const AppDag& dag, const ScheduleConfig& sched);

/// Per-task response time: finish minus the time the task's inputs were all
/// produced (release for source tasks, latest predecessor finish otherwise).
/// Includes transfer delay and any node queueing.
std::vector<double> task_response_times(const AppDag& dag, const ScheduleConfig& sched);

/// Task ids on the critical path, source first. The path follows
/// latest-finishing predecessors back from the latest-finishing sink, so its
/// summed task response time equals the makespan. Among equally long paths the
/// lexicographically smallest id sequence wins.
std::vector<int> critical_path(const AppDag& dag, const ScheduleConfig& sched);

/// Sum over applications of the response times of their critical-path tasks.
double response_time(std::span<const AppDag> dags, std::span<const ScheduleConfig> scheds);

/// Sum of every task's energy over all applications.
double energy_consumption(std::span<const AppDag> dags, std::span<const ScheduleConfig> scheds);

inline constexpr double kDefaultCostWeight = 0.5;

/// w1 * rt / baseline_rt + w2 * ec / baseline_ec.
double weighted_cost(double rt, double ec, double baseline_rt, double baseline_ec,
                     double w1 = kDefaultCostWeight, double w2 = kDefaultCostWeight);

struct EmissionSource {
    double factor_g_per_kwh = 0.0;
    double proportion = 0.0;
};

/// Grams of CO2-equivalent for `energy_kwh` drawn from the given generation mix.
double ghg_emissions(double energy_kwh, std::span<const EmissionSource> mix);

}  // namespace reinfog
