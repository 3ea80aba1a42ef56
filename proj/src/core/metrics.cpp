#include "reinfog/core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace reinfog {

namespace {

// Records aligned with dag task indices.
std::vector<const TaskRecord*> align(const AppDag& dag, const ScheduleConfig& sched) {
    std::vector<const TaskRecord*> out(dag.size(), nullptr);
    for (const auto& rec : sched.records) {
        if (!dag.contains(rec.task_id)) continue;
        out[dag.index_of(rec.task_id)] = &rec;
    }
    for (const auto* rec : out)
        if (rec == nullptr) throw IncompleteSchedule();
    return out;
}

std::vector<double> inputs_ready(const AppDag& dag, const ScheduleConfig& sched,
                                 const std::vector<const TaskRecord*>& recs) {
    std::vector<double> ready(dag.size(), sched.release);
    for (std::size_t i = 0; i < dag.size(); ++i)
        for (std::size_t p : dag.predecessors_of(i)) ready[i] = std::max(ready[i], recs[p]->finish);
    return ready;
}

void check_sizes(std::span<const AppDag> dags, std::span<const ScheduleConfig> scheds) {
    if (dags.size() != scheds.size())
        throw std::invalid_argument("one schedule per application is required");
}

}  // namespace

const TaskRecord* ScheduleConfig::find(int task_id) const {
    for (const auto& rec : records)
        if (rec.task_id == task_id) return &rec;
    return nullptr;
}

double makespan(const AppDag& dag, const ScheduleConfig& sched) {
    auto recs = align(dag, sched);
    double latest = sched.release;
    for (const auto* rec : recs) latest = std::max(latest, rec->finish);
    return latest - sched.release;
}

std::vector<double> task_response_times(const AppDag& dag, const ScheduleConfig& sched) {
    auto recs = align(dag, sched);
    auto ready = inputs_ready(dag, sched, recs);
    std::vector<double> rt(dag.size());
    for (std::size_t i = 0; i < dag.size(); ++i) rt[i] = recs[i]->finish - ready[i];
    return rt;
}

std::vector<int> critical_path(const AppDag& dag, const ScheduleConfig& sched) {
    auto recs = align(dag, sched);
    auto ready = inputs_ready(dag, sched, recs);

    double latest = -std::numeric_limits<double>::infinity();
    for (const auto* rec : recs) latest = std::max(latest, rec->finish);

    // A predecessor is tight for a task when it is the (or a) last input to arrive.
    auto tight = [&](std::size_t pred, std::size_t task) { return recs[pred]->finish == ready[task]; };
    auto is_end = [&](std::size_t i) { return recs[i]->finish == latest; };

    std::vector<bool> reaches_end(dag.size(), false);
    const auto& topo = dag.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        std::size_t i = *it;
        bool ok = is_end(i);
        for (std::size_t s : dag.successors_of(i))
            if (!ok && reaches_end[s] && tight(i, s)) ok = true;
        reaches_end[i] = ok;
    }

    auto smallest = [&](auto&& candidates) {
        std::size_t best = dag.size();
        for (std::size_t c : candidates)
            if (best == dag.size() || dag.task(c).id < dag.task(best).id) best = c;
        return best;
    };

    std::vector<std::size_t> sources;
    for (std::size_t i = 0; i < dag.size(); ++i)
        if (dag.predecessors_of(i).empty() && reaches_end[i]) sources.push_back(i);

    std::vector<int> path;
    std::size_t cur = smallest(sources);
    while (cur != dag.size()) {
        path.push_back(dag.task(cur).id);
        if (is_end(cur)) break;
        std::vector<std::size_t> next;
        for (std::size_t s : dag.successors_of(cur))
            if (reaches_end[s] && tight(cur, s)) next.push_back(s);
        cur = smallest(next);
    }
    return path;
}

double response_time(std::span<const AppDag> dags, std::span<const ScheduleConfig> scheds) {
    check_sizes(dags, scheds);
    double total = 0.0;
    for (std::size_t a = 0; a < dags.size(); ++a) {
        auto rts = task_response_times(dags[a], scheds[a]);
        for (int id : critical_path(dags[a], scheds[a])) total += rts[dags[a].index_of(id)];
    }
    return total;
}

double energy_consumption(std::span<const AppDag> dags, std::span<const ScheduleConfig> scheds) {
    check_sizes(dags, scheds);
    double total = 0.0;
    for (std::size_t a = 0; a < dags.size(); ++a)
        for (const auto* rec : align(dags[a], scheds[a])) total += rec->energy;
    return total;
}

double weighted_cost(double rt, double ec, double baseline_rt, double baseline_ec, double w1, double w2) {
    if (!(baseline_rt > 0.0) || !(baseline_ec > 0.0))
        throw std::invalid_argument("weighted cost baselines must be > 0");
    if (w1 < 0.0 || w2 < 0.0 || std::abs(w1 + w2 - 1.0) > 1e-9)
        throw std::invalid_argument("weighted cost weights must be non-negative and sum to 1");
    return w1 * (rt / baseline_rt) + w2 * (ec / baseline_ec);
}

double ghg_emissions(double energy_kwh, std::span<const EmissionSource> mix) {
    if (!(energy_kwh >= 0.0)) throw std::invalid_argument("energy must be >= 0");
    double share = 0.0;
    double intensity = 0.0;
    for (const auto& src : mix) {
        if (!(src.factor_g_per_kwh >= 0.0) || !(src.proportion >= 0.0))
            throw std::invalid_argument("emission factors and proportions must be >= 0");
        share += src.proportion;
        intensity += src.factor_g_per_kwh * src.proportion;
    }
    if (std::abs(share - 1.0) > 1e-9) throw std::invalid_argument("generation mix proportions must sum to 1");
    return energy_kwh * intensity;
}

}  // namespace reinfog
