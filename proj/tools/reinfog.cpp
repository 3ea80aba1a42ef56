// Command-line driver. Exit codes: 0 success, 1 usage or configuration
// error, 2 runtime error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reinfog/experiments/commands.hpp"

namespace ex = reinfog::experiments;

namespace {

struct Flags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out = "results";
    std::optional<std::size_t> reps;
    std::optional<std::size_t> workers;
    std::optional<std::size_t> episodes;
    std::string listen;
    std::string connect;
    std::uint32_t worker_id = 0;
    std::string instance, cluster, workload, policy, baseline, algorithms;
    std::vector<std::string> sets;
    bool timing = false;
    bool async = false;
};

void add_shared(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON config with flat module.param keys");
    cmd->add_option("--seed", f.seed, "Seed for every random choice");
    cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
    cmd->add_option("--reps", f.reps, "Repetitions (default 10)");
    cmd->add_option("--set", f.sets, "Override a config key: key=value (repeatable)");
    cmd->add_flag("--timing", f.timing, "Fill wall-clock columns in the CSV output");
}

ex::RunContext build_context(const Flags& f) {
    ex::RunContext ctx;
    if (!f.config.empty()) ctx.config = ex::ExperimentConfig::from_file(f.config);
    auto set_text = [&](const char* key, const std::string& v) {
        if (!v.empty()) ctx.config.set(key, v);
    };
    set_text("instance.path", f.instance);
    set_text("env.cluster", f.cluster);
    set_text("env.workload", f.workload);
    set_text("simulate.policy", f.policy);
    set_text("simulate.baseline", f.baseline);
    set_text("placement.algorithms", f.algorithms);
    set_text("train.listen", f.listen);
    if (f.seed) ctx.config.set("run.seed", *f.seed);
    if (f.reps) ctx.config.set("run.reps", *f.reps);
    if (f.workers) ctx.config.set("train.workers", *f.workers);
    if (f.episodes) ctx.config.set("train.episodes", *f.episodes);
    if (f.async) ctx.config.set("train.async", true);
    for (const auto& s : f.sets) ctx.config.set_from_text(s);
    ctx.out = f.out;
    ctx.timing = f.timing || ctx.config.flag("run.timing", false);
    ctx.connect = f.connect;
    ctx.worker_id = f.worker_id;
    return ctx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fog DRL component placement and scheduling experiments"};
    app.require_subcommand(1);
    Flags f;

    auto* place = app.add_subcommand("place", "Run placement algorithms over seeded repetitions");
    add_shared(place, f);
    place->add_option("--instance", f.instance, "Placement instance JSON (generated when absent)");
    place->add_option("--algorithms", f.algorithms, "Comma-separated: madcp,ga,fa,pso,random");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimal placement for small instances");
    add_shared(oracle, f);
    oracle->add_option("--instance", f.instance, "Placement instance JSON (generated when absent)");

    auto* bench = app.add_subcommand("bench", "Time MADCP generations across population sizes");
    add_shared(bench, f);

    std::vector<CLI::App*> sched;
    auto* train = app.add_subcommand("train", "Centralized DQN training");
    auto* train_dist = app.add_subcommand("train-dist", "Distributed DQN training with local workers");
    auto* worker = app.add_subcommand("worker", "Run one worker against a remote learner");
    auto* simulate = app.add_subcommand("simulate", "Run a saved policy or a baseline over a workload");
    for (auto* cmd : {train, train_dist, worker, simulate}) {
        add_shared(cmd, f);
        cmd->add_option("--cluster", f.cluster, "Cluster JSON (built-in three-node cluster when absent)");
        cmd->add_option("--workload", f.workload, "Workload JSON (generated when absent)");
    }
    for (auto* cmd : {train, train_dist, worker}) cmd->add_option("--episodes", f.episodes, "Training episodes");
    train_dist->add_option("--workers", f.workers, "Local workers, 1 to 30");
    train_dist->add_option("--listen", f.listen, "Learner address host:port (port 0 picks one)");
    for (auto* cmd : {train_dist, worker})
        cmd->add_flag("--async", f.async, "Free-running workers instead of deterministic rounds");
    worker->add_option("--connect", f.connect, "Learner address host:port (default $REINFOG_LEARNER_ADDR)");
    worker->add_option("--worker-id", f.worker_id, "Worker id");
    simulate->add_option("--policy", f.policy, "Saved policy JSON");
    simulate->add_option("--baseline", f.baseline, "round_robin, greedy or random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const auto mode = ex::mode_from_string(app.get_subcommands().front()->get_name());
        const auto ctx = build_context(f);
        ex::run_command(mode, ctx, std::cerr);
        return 0;
    } catch (const ex::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
