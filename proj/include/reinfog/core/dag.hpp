#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace reinfog {

struct Task {
    int id = 0;
    double compute_req = 0.0;  ///< mega-cycles, > 0
    double input_size = 0.0;  ///< MB received from the application origin (source tasks)
    double output_size = 0.0; ///< MB shipped to each successor
    std::vector<int> predecessors;
    /// Optional completion deadline relative to the application release.
    std::optional<double> deadline;

    bool operator==(const Task&) const = default;
};

/// An application: a validated DAG of tasks. Tasks are addressed either by id
/// or by their position ("index") in `tasks()`.
class AppDag {
public:
    /// Throws std::invalid_argument on empty task lists, duplicate ids, dangling
    /// predecessor references, non-positive compute or cycles.
    AppDag(int id, std::vector<Task> tasks, double release_s = 0.0);

    int id() const noexcept { return id_; }
    double release() const noexcept { return release_; }
    const std::vector<Task>& tasks() const noexcept { return tasks_; }
    std::size_t size() const noexcept { return tasks_.size(); }
    const Task& task(std::size_t index) const { return tasks_[index]; }

    bool contains(int task_id) const { return index_.count(task_id) != 0; }
    std::size_t index_of(int task_id) const;

    const std::vector<std::size_t>& predecessors_of(std::size_t index) const { return preds_[index]; }
    const std::vector<std::size_t>& successors_of(std::size_t index) const { return succs_[index]; }

    /// Kahn order; among ready tasks the smallest id goes first.
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

    bool operator==(const AppDag& other) const {
        return id_ == other.id_ && release_ == other.release_ && tasks_ == other.tasks_;
    }

private:
    int id_;
    double release_;
    std::vector<Task> tasks_;
    std::unordered_map<int, std::size_t> index_;
    std::vector<std::vector<std::size_t>> preds_;
    std::vector<std::vector<std::size_t>> succs_;
    std::vector<std::size_t> topo_;
};

/// Sub-DAG induced by a predecessor-closed subset of task indices.
AppDag restrict_dag(const AppDag& dag, const std::vector<std::size_t>& indices);

}  // namespace reinfog
