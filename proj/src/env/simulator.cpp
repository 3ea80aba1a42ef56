#include "reinfog/env/simulator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace reinfog::env {

namespace {

struct SimTask {
    std::size_t app = 0;
    std::size_t index = 0;
    std::size_t node = 0;
    std::size_t waiting_on = 0;
    double ready = 0.0;
    TaskRecord record;
};

}  // namespace

double task_footprint(const Task& t) { return t.input_size + t.output_size; }

std::vector<ScheduleConfig> simulate_workload(const ClusterSpec& cluster, std::span<const AppDag> apps,
                                              const Mapping& mapping, Endpoint origin) {
    if (mapping.size() != apps.size()) throw std::invalid_argument("mapping must list every application");

    // Flatten committed tasks; slot[app][index] -> position in `tasks`.
    std::vector<SimTask> tasks;
    std::vector<std::vector<std::size_t>> slot(apps.size());
    for (std::size_t a = 0; a < apps.size(); ++a) {
        const AppDag& dag = apps[a];
        if (mapping[a].size() != dag.size()) throw std::invalid_argument("mapping size differs from task count");
        slot[a].assign(dag.size(), kUnassigned);
        for (std::size_t i = 0; i < dag.size(); ++i) {
            const std::size_t node = mapping[a][i];
            if (node == kUnassigned) continue;
            if (node >= cluster.node_count()) throw std::invalid_argument("mapping references an unknown node");
            for (std::size_t p : dag.predecessors_of(i))
                if (mapping[a][p] == kUnassigned)
                    throw std::invalid_argument("committed tasks must be closed under predecessors");
            slot[a][i] = tasks.size();
            SimTask st;
            st.app = a;
            st.index = i;
            st.node = node;
            st.waiting_on = dag.predecessors_of(i).size();
            st.record.task_id = dag.task(i).id;
            st.record.node = node;
            tasks.push_back(st);
        }
    }

    using Key = std::tuple<double, int, std::size_t, std::size_t>;  // ready, task id, app, slot
    std::vector<std::set<Key>> queue(cluster.node_count());
    std::vector<double> node_free(cluster.node_count(), 0.0);

    auto enqueue = [&](std::size_t s) {
        SimTask& t = tasks[s];
        queue[t.node].insert({t.ready, t.record.task_id, t.app, s});
    };

    for (std::size_t s = 0; s < tasks.size(); ++s) {
        SimTask& t = tasks[s];
        if (t.waiting_on != 0) continue;
        const AppDag& dag = apps[t.app];
        t.ready = dag.release() +
                  cluster.transfer_time(origin, static_cast<Endpoint>(t.node), dag.task(t.index).input_size);
        enqueue(s);
    }

    for (std::size_t dispatched = 0; dispatched < tasks.size(); ++dispatched) {
        std::size_t best_node = kUnassigned;
        double best_time = 0.0;
        for (std::size_t j = 0; j < queue.size(); ++j) {
            if (queue[j].empty()) continue;
            const double when = std::max(node_free[j], std::get<0>(*queue[j].begin()));
            if (best_node == kUnassigned || when < best_time) {
                best_node = j;
                best_time = when;
            }
        }
        if (best_node == kUnassigned) throw std::logic_error("simulation stalled with undispatched tasks");

        const std::size_t s = std::get<3>(*queue[best_node].begin());
        queue[best_node].erase(queue[best_node].begin());
        SimTask& t = tasks[s];
        const AppDag& dag = apps[t.app];
        const Task& spec = dag.task(t.index);
        const Node& node = cluster.node(t.node);

        const double duration = spec.compute_req / node.compute_cap;
        t.record.start = best_time;
        t.record.finish = best_time + duration;
        t.record.energy = node.power_draw * duration;
        const bool fits = task_footprint(spec) <= node.mem_avail;
        const bool on_time = !spec.deadline || t.record.finish - dag.release() <= *spec.deadline;
        t.record.success = fits && on_time;
        node_free[best_node] = t.record.finish;

        for (std::size_t succ : dag.successors_of(t.index)) {
            const std::size_t ss = slot[t.app][succ];
            if (ss == kUnassigned) continue;
            SimTask& next = tasks[ss];
            next.ready = std::max(next.ready, t.record.finish + cluster.transfer_time(static_cast<Endpoint>(t.node),
                                                                                     static_cast<Endpoint>(next.node),
                                                                                     spec.output_size));
            if (--next.waiting_on == 0) enqueue(ss);
        }
    }

    std::vector<ScheduleConfig> out(apps.size());
    for (std::size_t a = 0; a < apps.size(); ++a) {
        out[a].release = apps[a].release();
        for (std::size_t i = 0; i < apps[a].size(); ++i)
            if (slot[a][i] != kUnassigned) out[a].records.push_back(tasks[slot[a][i]].record);
    }
    return out;
}

ScheduleConfig simulate_schedule(const ClusterSpec& cluster, const AppDag& dag,
                                 const std::vector<std::size_t>& choices, Endpoint origin) {
    if (choices.size() != dag.size()) throw std::invalid_argument("choices must cover every task");
    for (std::size_t c : choices)
        if (c == kUnassigned) throw std::invalid_argument("choices must cover every task");
    Mapping mapping{choices};
    return simulate_workload(cluster, std::span<const AppDag>(&dag, 1), mapping, origin).front();
}

}  // namespace reinfog::env
