#include "reinfog/env/environment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reinfog::env {

SchedulingEnv::SchedulingEnv(ClusterSpec cluster, std::vector<AppDag> workload, RewardSpec reward, Endpoint origin)
    : cluster_(std::move(cluster)), workload_(std::move(workload)), reward_(reward), origin_(origin) {
    reward_.validate();
    if (workload_.empty()) throw std::invalid_argument("workload must contain at least one application");
    scales_ = feature_scales(cluster_, workload_);

    std::vector<std::size_t> apps(workload_.size());
    std::iota(apps.begin(), apps.end(), std::size_t{0});
    std::stable_sort(apps.begin(), apps.end(),
                     [&](std::size_t a, std::size_t b) { return workload_[a].release() < workload_[b].release(); });
    for (std::size_t a : apps)
        for (std::size_t t : workload_[a].topological_order()) order_.emplace_back(a, t);
    reset();
}

void SchedulingEnv::reset() {
    cursor_ = 0;
    mapping_.assign(workload_.size(), {});
    for (std::size_t a = 0; a < workload_.size(); ++a) mapping_[a].assign(workload_[a].size(), kUnassigned);
    schedules_.assign(workload_.size(), ScheduleConfig{});
    for (std::size_t a = 0; a < workload_.size(); ++a) schedules_[a].release = workload_[a].release();
    rt_ = 0.0;
    ec_ = 0.0;
    rewards_.clear();
    actions_.clear();
}

std::pair<std::size_t, std::size_t> SchedulingEnv::pending() const {
    if (done()) throw std::logic_error("episode is done");
    return order_[cursor_];
}

SchedulingEnv::Totals SchedulingEnv::evaluate(const Mapping& mapping) const {
    Totals out;
    out.schedules = simulate_workload(cluster_, workload_, mapping, origin_);
    for (std::size_t a = 0; a < workload_.size(); ++a) {
        const auto& sched = out.schedules[a];
        if (sched.records.empty()) continue;
        for (const auto& rec : sched.records) out.ec += rec.energy;
        if (sched.records.size() == workload_[a].size()) {
            out.rt += response_time(std::span<const AppDag>(&workload_[a], 1),
                                    std::span<const ScheduleConfig>(&sched, 1));
        } else {
            std::vector<std::size_t> committed;
            for (std::size_t i = 0; i < workload_[a].size(); ++i)
                if (mapping[a][i] != kUnassigned) committed.push_back(i);
            const AppDag partial = restrict_dag(workload_[a], committed);
            out.rt += response_time(std::span<const AppDag>(&partial, 1), std::span<const ScheduleConfig>(&sched, 1));
        }
    }
    return out;
}

double SchedulingEnv::earliest_inputs(std::size_t app, std::size_t task) const {
    const AppDag& dag = workload_[app];
    double t = dag.release();
    for (std::size_t p : dag.predecessors_of(task)) t = std::max(t, schedules_[app].find(dag.task(p).id)->finish);
    return t;
}

std::vector<double> SchedulingEnv::observe() const {
    if (done()) return std::vector<double>(state_size(), 0.0);
    const auto [app, task] = order_[cursor_];
    const double now = earliest_inputs(app, task);
    const SimState sim = sim_state_at(cluster_, workload_, schedules_, now);
    return encode_state(cluster_, sim, workload_[app].task(task), workload_[app].successors_of(task).size(),
                        scales_);
}

StepOutcome SchedulingEnv::preview(std::size_t node) const {
    const auto [app, task] = pending();
    decode_action(static_cast<std::int64_t>(node), cluster_.node_count());
    Mapping next = mapping_;
    next[app][task] = node;
    const Totals totals = evaluate(next);
    StepOutcome out;
    out.delta_rt = totals.rt - rt_;
    out.delta_ec = totals.ec - ec_;
    out.success = totals.schedules[app].find(workload_[app].task(task).id)->success;
    return out;
}

StepResult SchedulingEnv::step(std::size_t node) {
    const auto [app, task] = pending();
    decode_action(static_cast<std::int64_t>(node), cluster_.node_count());
    mapping_[app][task] = node;
    Totals totals = evaluate(mapping_);

    StepResult out;
    out.outcome.delta_rt = totals.rt - rt_;
    out.outcome.delta_ec = totals.ec - ec_;
    out.outcome.success = totals.schedules[app].find(workload_[app].task(task).id)->success;
    out.reward = compute_reward(out.outcome, reward_);

    schedules_ = std::move(totals.schedules);
    rt_ = totals.rt;
    ec_ = totals.ec;
    rewards_.push_back(out.reward);
    actions_.push_back(node);
    ++cursor_;
    out.done = done();
    return out;
}

EpisodeResult SchedulingEnv::result() const {
    if (!done()) throw std::logic_error("episode is not done");
    EpisodeResult out;
    for (const auto& dag : workload_) out.app_ids.push_back(dag.id());
    out.schedules = schedules_;
    out.response_time = response_time(workload_, schedules_);
    out.energy = energy_consumption(workload_, schedules_);
    out.weighted_cost =
        weighted_cost(out.response_time, out.energy, reward_.baseline_rt, reward_.baseline_ec, reward_.w1, reward_.w2);
    out.rewards = rewards_;
    out.actions = actions_;
    for (const auto& sched : schedules_)
        for (const auto& rec : sched.records) out.failures += rec.success ? 0 : 1;
    return out;
}

EpisodeResult run_episode(SchedulingEnv& env, const Policy& policy) {
    env.reset();
    while (!env.done()) {
        const auto state = env.observe();
        env.step(policy(env, state));
    }
    return env.result();
}

EpisodeResult run_episode(const ClusterSpec& cluster, const std::vector<AppDag>& workload, const Policy& policy,
                          const RewardSpec& reward, Endpoint origin) {
    SchedulingEnv env(cluster, workload, reward, origin);
    return run_episode(env, policy);
}

}  // namespace reinfog::env
