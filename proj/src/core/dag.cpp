#include "reinfog/core/dag.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace reinfog {

AppDag::AppDag(int id, std::vector<Task> tasks, double release_s)
    : id_(id), release_(release_s), tasks_(std::move(tasks)) {
    if (tasks_.empty()) throw std::invalid_argument("application " + std::to_string(id_) + " has no tasks");
    if (!std::isfinite(release_) || release_ < 0.0)
        throw std::invalid_argument("application release time must be >= 0");

    for (std::size_t i = 0; i < tasks_.size(); ++i) {
        const Task& t = tasks_[i];
        if (!std::isfinite(t.compute_req) || t.compute_req <= 0.0)
            throw std::invalid_argument("task " + std::to_string(t.id) + " compute_req must be > 0");
        if (!(t.input_size >= 0.0) || !(t.output_size >= 0.0))
            throw std::invalid_argument("task " + std::to_string(t.id) + " sizes must be >= 0");
        if (t.deadline && !(*t.deadline > 0.0))
            throw std::invalid_argument("task " + std::to_string(t.id) + " deadline must be > 0");
        if (!index_.emplace(t.id, i).second)
            throw std::invalid_argument("duplicate task id " + std::to_string(t.id));
    }

    preds_.resize(tasks_.size());
    succs_.resize(tasks_.size());
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
        for (int p : tasks_[i].predecessors) {
            auto it = index_.find(p);
            if (it == index_.end())
                throw std::invalid_argument("task " + std::to_string(tasks_[i].id) +
                                            " references unknown predecessor " + std::to_string(p));
            if (std::find(preds_[i].begin(), preds_[i].end(), it->second) != preds_[i].end())
                throw std::invalid_argument("task " + std::to_string(tasks_[i].id) +
                                            " lists predecessor " + std::to_string(p) + " twice");
            preds_[i].push_back(it->second);
            succs_[it->second].push_back(i);
        }
    }

    auto by_id = [this](std::size_t a, std::size_t b) { return tasks_[a].id > tasks_[b].id; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_id)> ready(by_id);
    std::vector<std::size_t> remaining(tasks_.size());
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
        remaining[i] = preds_[i].size();
        if (remaining[i] == 0) ready.push(i);
    }
    while (!ready.empty()) {
        std::size_t i = ready.top();
        ready.pop();
        topo_.push_back(i);
        for (std::size_t s : succs_[i])
            if (--remaining[s] == 0) ready.push(s);
    }
    if (topo_.size() != tasks_.size())
        throw std::invalid_argument("application " + std::to_string(id_) + " task graph has a cycle");
}

std::size_t AppDag::index_of(int task_id) const {
    auto it = index_.find(task_id);
    if (it == index_.end()) throw std::out_of_range("unknown task id " + std::to_string(task_id));
    return it->second;
}

AppDag restrict_dag(const AppDag& dag, const std::vector<std::size_t>& indices) {
    std::vector<bool> keep(dag.size(), false);
    for (std::size_t i : indices) keep.at(i) = true;
    std::vector<Task> tasks;
    tasks.reserve(indices.size());
    for (std::size_t i = 0; i < dag.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t p : dag.predecessors_of(i))
            if (!keep[p]) throw std::invalid_argument("task subset is not predecessor-closed");
        tasks.push_back(dag.task(i));
    }
    return AppDag(dag.id(), std::move(tasks), dag.release());
}

}  // namespace reinfog
