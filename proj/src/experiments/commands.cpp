#include "reinfog/experiments/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <thread>

#include "reinfog/core/io.hpp"
#include "reinfog/dist/centralized.hpp"
#include "reinfog/dist/learner.hpp"
#include "reinfog/dist/worker.hpp"
#include "reinfog/drl/policy_store.hpp"
#include "reinfog/env/baselines.hpp"
#include "reinfog/env/io.hpp"
#include "reinfog/env/workload.hpp"
#include "reinfog/experiments/csv.hpp"
#include "reinfog/placement/algorithms.hpp"
#include "reinfog/placement/brute_force.hpp"
#include "reinfog/placement/instance_gen.hpp"

namespace reinfog::experiments {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kDefaultReps = 10;
constexpr std::size_t kMaxWorkers = 30;

std::uint64_t require_seed(const ExperimentConfig& cfg) {
    auto seed = cfg.optional_u64("run.seed");
    if (!seed) throw ConfigError("a seed is required (--seed or run.seed)");
    return *seed;
}

template <typename F>
auto config_guard(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const FormatError& e) {
        throw ConfigError(e.what());
    }
}

// ---------------------------------------------------------------- placement

PlacementInstance instance_of(const ExperimentConfig& cfg, std::uint64_t seed) {
    return config_guard([&] {
        if (cfg.has("instance.path")) {
            const fs::path path = cfg.text("instance.path", "");
            if (!fs::exists(path)) throw ConfigError("instance file not found: " + path.string());
            return load_instance(path);
        }
        placement::InstanceSpec spec;
        spec.components = cfg.count("instance.components", spec.components);
        spec.nodes = cfg.count("instance.nodes", spec.nodes);
        spec.omega1 = cfg.number("instance.omega1", spec.omega1);
        spec.omega2 = cfg.number("instance.omega2", 1.0 - spec.omega1);
        spec.learners = cfg.count("instance.learners", spec.learners);
        if (spec.components < 1 || spec.nodes < 1) throw ConfigError("instance needs components and nodes");
        auto inst = placement::generate_instance(spec, seed);
        if (cfg.flag("instance.normalize", false))
            return PlacementInstance(inst.components(), inst.nodes(), inst.omega1(), inst.omega2(), true);
        return inst;
    });
}

placement::PlacementParams placement_params(const ExperimentConfig& cfg, placement::Algorithm algo,
                                            std::uint64_t seed) {
    auto p = placement::default_params(algo);
    p.population_size = cfg.count("placement.population", p.population_size);
    p.generations = cfg.count("placement.generations", p.generations);
    p.num_operations = cfg.count("placement.num_operations", p.num_operations);
    p.crossover_rate = cfg.number("placement.crossover_rate", p.crossover_rate);
    p.mutation_rate = cfg.number("placement.mutation_rate", p.mutation_rate);
    p.fa_alpha = cfg.number("placement.fa_alpha", p.fa_alpha);
    p.fa_beta = cfg.number("placement.fa_beta", p.fa_beta);
    p.fa_gamma = cfg.number("placement.fa_gamma", p.fa_gamma);
    p.pso_w = cfg.number("placement.pso_w", p.pso_w);
    p.pso_c1 = cfg.number("placement.pso_c1", p.pso_c1);
    p.pso_c2 = cfg.number("placement.pso_c2", p.pso_c2);
    p.penalty_lambda = cfg.number("placement.penalty_lambda", p.penalty_lambda);
    p.rng_seed = seed;
    config_guard([&] {
        p.validate();
        return 0;
    });
    return p;
}

std::string assignment_text(const Assignment& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? " " : "") + std::to_string(a[i]);
    return out;
}

std::string rep_tag(std::size_t rep) {
    std::string s = std::to_string(rep);
    return std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

void cmd_place(const RunContext& ctx, std::ostream& log) {
    const auto& cfg = ctx.config;
    const std::uint64_t seed = require_seed(cfg);
    const std::size_t reps = cfg.count("run.reps", kDefaultReps);
    if (reps < 1) throw ConfigError("reps must be >= 1");
    std::vector<placement::Algorithm> algos;
    for (const auto& name : cfg.list("placement.algorithms", {"madcp", "ga", "fa", "pso", "random"}))
        algos.push_back(config_guard([&] { return placement::algorithm_from_string(name); }));
    const PlacementInstance inst = instance_of(cfg, seed);
    const std::string meta = metadata_line("place", seed);

    CsvTable summary({"algorithm", "reps", "mean_best_F", "stdev_best_F", "feasibility_rate", "mean_wall_ms"});
    CsvTable best({"algorithm", "rep", "best_F", "best_fitness", "feasible", "assignment"});
    for (auto algo : algos) {
        std::vector<double> finals;
        std::size_t feasible = 0;
        double wall = 0.0;
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const auto params = placement_params(cfg, algo, dist::derive_seed(seed, rep));
            const auto result = placement::run_algorithm(algo, inst, params);
            CsvTable trace({"generation", "best_fitness", "best_F", "feasible", "elapsed_ms"});
            for (const auto& g : result.trace.generations)
                trace.add_row({cell(g.generation), cell(g.best_fitness), cell(g.best_objective), cell(g.feasible),
                               ctx.timing ? cell(g.elapsed_ms) : ""});
            trace.write(ctx.out / ("trace_" + placement::to_string(algo) + "_r" + rep_tag(rep) + ".csv"), meta);
            const auto& last = result.trace.generations.back();
            finals.push_back(last.best_objective);
            feasible += last.feasible ? 1 : 0;
            wall += last.elapsed_ms;
            best.add_row({placement::to_string(algo), cell(rep), cell(result.objective), cell(result.fitness),
                          cell(result.feasible), assignment_text(result.assignment)});
        }
        const double n = static_cast<double>(finals.size());
        double mean = 0.0;
        for (double f : finals) mean += f;
        mean /= n;
        double var = 0.0;
        for (double f : finals) var += (f - mean) * (f - mean);
        const double stdev = finals.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
        summary.add_row({placement::to_string(algo), cell(reps), cell(mean), cell(stdev),
                         cell(static_cast<double>(feasible) / n), ctx.timing ? cell(wall / n) : ""});
        log << placement::to_string(algo) << ": mean best F " << format_number(mean) << " over " << reps
            << " reps\n";
    }
    summary.write(ctx.out / "summary.csv", meta);
    best.write(ctx.out / "best.csv", meta);
}

void cmd_oracle(const RunContext& ctx, std::ostream& log) {
    const auto& cfg = ctx.config;
    const std::uint64_t seed = cfg.u64("run.seed", 0);
    const PlacementInstance inst = instance_of(cfg, seed);
    const auto opt = placement::brute_force_optimal(inst);  // SearchSpaceTooLarge is a runtime refusal
    const double lambda = cfg.number("placement.penalty_lambda", placement::kDefaultPenaltyLambda);
    nlohmann::json doc{{"assignment", opt.assignment.node_of},
                       {"objective", opt.objective},
                       {"fitness", placement::fitness(opt.assignment, inst, lambda)},
                       {"evaluated", opt.evaluated},
                       {"search_space", placement::search_space_size(inst)}};
    write_text_file(ctx.out / "oracle.json", doc.dump(2) + "\n");
    CsvTable table({"component_id", "node_id"});
    for (std::size_t i = 0; i < inst.component_count(); ++i)
        table.add_row({cell(inst.components()[i].id), cell(inst.nodes()[opt.assignment[i]].id)});
    table.write(ctx.out / "oracle.csv", metadata_line("oracle", seed));
    log << "optimal F " << format_number(opt.objective) << " after " << opt.evaluated << " assignments\n";
}

void cmd_bench(const RunContext& ctx, std::ostream& log) {
    const auto& cfg = ctx.config;
    const std::uint64_t seed = require_seed(cfg);
    std::vector<std::size_t> pops;
    for (const auto& s : cfg.list("bench.populations", {"25", "50", "100", "200"})) {
        try {
            pops.push_back(static_cast<std::size_t>(std::stoul(s)));
        } catch (const std::exception&) {
            throw ConfigError("bench.populations must list integers, got " + s);
        }
    }
    placement::InstanceSpec spec;
    spec.components = cfg.count("bench.components", 20);
    spec.nodes = cfg.count("bench.nodes", 10);
    const std::size_t generations = cfg.count("bench.generations", 20);
    const auto inst = config_guard([&] { return placement::generate_instance(spec, seed); });

    CsvTable table({"P", "m", "n", "generations", "best_F", "median_gen_ms", "ratio_to_previous"});
    double previous = 0.0;
    for (std::size_t p : pops) {
        auto params = placement_params(cfg, placement::Algorithm::madcp, seed);
        params.population_size = p;
        params.generations = generations;
        config_guard([&] {
            params.validate();
            return 0;
        });
        const auto result = placement::madcp_run(inst, params);
        std::vector<double> per_gen;
        const auto& gens = result.trace.generations;
        for (std::size_t g = 1; g < gens.size(); ++g) per_gen.push_back(gens[g].elapsed_ms - gens[g - 1].elapsed_ms);
        std::sort(per_gen.begin(), per_gen.end());
        const std::size_t k = per_gen.size();
        const double median = k % 2 ? per_gen[k / 2] : 0.5 * (per_gen[k / 2 - 1] + per_gen[k / 2]);
        const double ratio = previous > 0.0 ? median / previous : 0.0;
        table.add_row({cell(p), cell(spec.components), cell(spec.nodes), cell(generations), cell(result.objective),
                       ctx.timing ? cell(median) : "", ctx.timing && previous > 0.0 ? cell(ratio) : ""});
        log << "P=" << p << " median generation " << format_number(median) << " ms";
        if (previous > 0.0) log << " (x" << format_number(ratio) << ")";
        log << "\n";
        previous = median;
    }
    table.write(ctx.out / "bench.csv", metadata_line("bench", seed));
}

// ---------------------------------------------------------------- scheduling

env::ClusterSpec cluster_of(const ExperimentConfig& cfg) {
    return config_guard([&] {
        if (!cfg.has("env.cluster")) return env::reference_cluster();
        const fs::path path = cfg.text("env.cluster", "");
        if (!fs::exists(path)) throw ConfigError("cluster file not found: " + path.string());
        return env::load_cluster(path);
    });
}

std::vector<AppDag> workload_of(const ExperimentConfig& cfg, std::uint64_t seed) {
    return config_guard([&] {
        if (cfg.has("env.workload")) {
            const fs::path path = cfg.text("env.workload", "");
            if (!fs::exists(path)) throw ConfigError("workload file not found: " + path.string());
            return env::load_workload(path);
        }
        auto spec = env::reference_workload_spec();
        spec.app_count = cfg.count("workload.apps", spec.app_count);
        spec.tasks_per_app = cfg.count("workload.tasks", spec.tasks_per_app);
        spec.layers = cfg.count("workload.layers", spec.layers);
        spec.edge_density = cfg.number("workload.edge_density", spec.edge_density);
        spec.compute_min = cfg.number("workload.compute_min", spec.compute_min);
        spec.compute_max = cfg.number("workload.compute_max", spec.compute_max);
        spec.input_min = cfg.number("workload.input_min", spec.input_min);
        spec.input_max = cfg.number("workload.input_max", spec.input_max);
        spec.output_min = cfg.number("workload.output_min", spec.output_min);
        spec.output_max = cfg.number("workload.output_max", spec.output_max);
        spec.arrival_rate = cfg.number("workload.arrival_rate", spec.arrival_rate);
        return env::generate_workload(spec, cfg.u64("workload.seed", seed));
    });
}

env::RewardSpec reward_of(const ExperimentConfig& cfg, const env::ClusterSpec& cluster,
                          const std::vector<AppDag>& workload) {
    return config_guard([&] {
        auto spec = env::make_reward_spec(cluster, workload,
                                          env::reward_metric_from_string(cfg.text("env.metric", "weighted_cost")),
                                          cfg.number("env.failure_penalty", env::kDefaultFailurePenalty));
        spec.w1 = cfg.number("env.w1", spec.w1);
        spec.w2 = 1.0 - spec.w1;
        spec.validate();
        return spec;
    });
}

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& items, const std::string& key) {
    std::vector<std::size_t> out;
    for (const auto& s : items) {
        try {
            out.push_back(static_cast<std::size_t>(std::stoul(s)));
        } catch (const std::exception&) {
            throw ConfigError(key + " must list integers, got " + s);
        }
    }
    return out;
}

dist::TrainingConfig training_of(const ExperimentConfig& cfg, std::uint64_t seed) {
    return config_guard([&] {
        dist::TrainingConfig t;
        t.seed = seed;
        t.episodes = cfg.count("train.episodes", t.episodes);
        auto& d = t.dqn;
        d.learning_rate = cfg.number("dqn.lr", d.learning_rate);
        d.gamma = cfg.number("dqn.gamma", d.gamma);
        d.batch_size = cfg.count("dqn.batch_size", d.batch_size);
        d.target_sync_interval = cfg.count("dqn.target_sync", d.target_sync_interval);
        d.replay_capacity = cfg.count("dqn.replay_capacity", d.replay_capacity);
        const auto hidden = cfg.list("dqn.hidden", {});
        if (hidden.size() == 1 && hidden.front() == "wide")
            d.hidden_layers = drl::kWideHiddenLayers;
        else if (!hidden.empty())
            d.hidden_layers = parse_sizes(hidden, "dqn.hidden");
        d.activation = drl::activation_from_string(cfg.text("dqn.activation", drl::to_string(d.activation)));
        d.optimizer = drl::optimizer_from_string(cfg.text("dqn.optimizer", drl::to_string(d.optimizer)));
        d.epsilon.start = cfg.number("dqn.eps_start", d.epsilon.start);
        d.epsilon.end = cfg.number("dqn.eps_end", d.epsilon.end);
        d.epsilon.decay_steps = cfg.u64("dqn.eps_decay", d.epsilon.decay_steps);
        t.exploration = drl::exploration_from_string(cfg.text("dqn.exploration", drl::to_string(t.exploration)));
        t.sync.sync_interval = cfg.count("train.sync_interval", t.sync.sync_interval);
        t.sync.batch_flush = cfg.count("train.batch_flush", t.sync.batch_flush);
        d.validate();
        t.sync.validate();
        return t;
    });
}

nlohmann::json policy_metadata(const std::string& command, std::uint64_t seed, const dist::TrainingConfig& t,
                               std::uint64_t updates) {
    return {{"command", command},
            {"seed", seed},
            {"episodes", t.episodes},
            {"updates", updates},
            {"learning_rate", t.dqn.learning_rate},
            {"gamma", t.dqn.gamma}};
}

std::vector<std::string> trace_header(bool with_worker) {
    std::vector<std::string> h{"episode", "total_reward", "response_time", "energy", "weighted_cost",
                               "failures", "epsilon", "policy_version", "updates"};
    if (with_worker) h.insert(h.begin(), "worker_id");
    return h;
}

std::vector<std::string> trace_row(const dist::EpisodeTrace& r) {
    return {cell(r.episode), cell(r.total_reward), cell(r.response_time), cell(r.energy), cell(r.weighted_cost),
            cell(r.failures), cell(r.epsilon), cell(r.policy_version), cell(r.updates)};
}

void cmd_train(const RunContext& ctx, std::ostream& log) {
    const auto& cfg = ctx.config;
    const std::uint64_t seed = require_seed(cfg);
    const auto cluster = cluster_of(cfg);
    const auto workload = workload_of(cfg, seed);
    const auto reward = reward_of(cfg, cluster, workload);
    const auto training = training_of(cfg, seed);

    env::SchedulingEnv environment(cluster, workload, reward);
    const auto result = dist::centralized_mode(environment, training);

    CsvTable trace(trace_header(false));
    for (const auto& r : result.trace) trace.add_row(trace_row(r));
    trace.write(ctx.out / "train_trace.csv", metadata_line("train", seed));
    drl::save_policy(result.policy, ctx.out / "policy.json", policy_metadata("train", seed, training, result.updates));
    log << "trained " << training.episodes << " episodes, " << result.updates << " updates\n";
}

dist::WorkerConfig worker_config(const dist::TrainingConfig& t, std::uint32_t id, bool lockstep) {
    dist::WorkerConfig w;
    w.worker_id = id;
    w.episodes = t.episodes;
    w.sync = t.sync;
    w.epsilon = t.dqn.epsilon;
    w.exploration = t.exploration;
    w.ou = t.ou;
    w.lockstep = lockstep;
    w.seed = t.seed;
    return w;
}

void cmd_train_dist(const RunContext& ctx, std::ostream& log) {
    const auto& cfg = ctx.config;
    const std::uint64_t seed = require_seed(cfg);
    const std::size_t workers = cfg.count("train.workers", 1);
    if (workers < 1 || workers > kMaxWorkers) throw ConfigError("workers must be between 1 and 30");
    const bool lockstep = !cfg.flag("train.async", false);
    const auto listen = config_guard([&] { return dist::parse_endpoint(cfg.text("train.listen", "127.0.0.1:0")); });
    const auto cluster = cluster_of(cfg);
    const auto workload = workload_of(cfg, seed);
    const auto reward = reward_of(cfg, cluster, workload);
    const auto training = training_of(cfg, seed);

    env::SchedulingEnv prototype(cluster, workload, reward);
    const auto initial = dist::initial_network(prototype.state_size(), prototype.action_count(), training.dqn, seed);

    dist::LearnerConfig lc;
    lc.sync = training.sync;
    lc.expected_workers = workers;
    lc.max_updates = cfg.u64("train.max_updates", 0);
    lc.lockstep = lockstep;
    dist::LearnerServer learner(listen,
                                dist::LearnerCore(drl::DqnAgent(initial, training.dqn), training.sync,
                                                  dist::derive_seed(seed, dist::kLearnerStream)),
                                lc);
    learner.start();
    const dist::HostPort target{listen.host == "0.0.0.0" ? "127.0.0.1" : listen.host, learner.port()};
    log << "learner listening on " << target.to_string() << "\n";

    std::vector<dist::WorkerReport> reports(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            try {
                reports[w] = dist::worker_loop(target, prototype, initial,
                                               worker_config(training, static_cast<std::uint32_t>(w), lockstep));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : threads) t.join();
    learner.request_stop();
    const auto lr = learner.wait();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    const std::string meta = metadata_line("train-dist", seed);
    CsvTable trace(trace_header(true));
    for (const auto& rep : reports)
        for (const auto& r : rep.trace) {
            auto row = trace_row(r);
            row.insert(row.begin(), cell(rep.worker_id));
            trace.add_row(std::move(row));
        }
    trace.write(ctx.out / "train_trace.csv", meta);
    CsvTable arrivals({"order", "worker_id", "seq", "experiences"});
    for (std::size_t i = 0; i < lr.arrivals.size(); ++i)
        arrivals.add_row({cell(i), cell(lr.arrivals[i].worker_id), cell(lr.arrivals[i].seq),
                          cell(lr.arrivals[i].experiences)});
    arrivals.write(ctx.out / "learner_arrivals.csv", meta);
    drl::save_policy(lr.policy, ctx.out / "policy.json", policy_metadata("train-dist", seed, training, lr.updates));
    log << workers << " workers, " << lr.experiences_received << " experiences, " << lr.updates << " updates ("
        << lr.stop_reason << ")\n";
}

void cmd_worker(const RunContext& ctx, std::ostream& log) {
    const auto& cfg = ctx.config;
    const std::uint64_t seed = require_seed(cfg);
    std::string addr = ctx.connect;
    if (addr.empty())
        if (const char* env_addr = std::getenv(dist::kLearnerAddrEnv)) addr = env_addr;
    if (addr.empty()) throw ConfigError(std::string("worker needs --connect or ") + dist::kLearnerAddrEnv);
    const auto target = config_guard([&] { return dist::parse_endpoint(addr); });
    const auto cluster = cluster_of(cfg);
    const auto workload = workload_of(cfg, seed);
    const auto reward = reward_of(cfg, cluster, workload);
    const auto training = training_of(cfg, seed);
    env::SchedulingEnv environment(cluster, workload, reward);
    const auto initial = dist::initial_network(environment.state_size(), environment.action_count(), training.dqn,
                                               seed);
    const auto report = dist::worker_loop(target, environment, initial,
                                          worker_config(training, ctx.worker_id, !cfg.flag("train.async", false)));
    CsvTable trace(trace_header(false));
    for (const auto& r : report.trace) trace.add_row(trace_row(r));
    trace.write(ctx.out / ("worker_" + std::to_string(ctx.worker_id) + "_trace.csv"), metadata_line("worker", seed));
    log << "worker " << ctx.worker_id << " sent " << report.experiences_sent << " experiences\n";
}

void cmd_simulate(const RunContext& ctx, std::ostream& log) {
    const auto& cfg = ctx.config;
    const std::uint64_t seed = require_seed(cfg);
    const auto cluster = cluster_of(cfg);
    const auto workload = workload_of(cfg, seed);
    const auto reward = reward_of(cfg, cluster, workload);
    env::SchedulingEnv environment(cluster, workload, reward);

    std::string source;
    env::Policy policy;
    if (cfg.has("simulate.policy")) {
        const fs::path path = cfg.text("simulate.policy", "");
        auto stored = drl::load_policy(path);  // missing or corrupt files are runtime errors
        if (stored.network.input_size() != environment.state_size() ||
            stored.network.output_size() != environment.action_count())
            throw std::runtime_error("policy " + path.string() + " does not fit this cluster");
        auto net = std::make_shared<const drl::NetworkParams>(std::move(stored.network));
        policy = [net](const env::SchedulingEnv&, std::span<const double> state) {
            return drl::argmax(drl::forward(*net, state));
        };
        source = "policy";
    } else {
        source = cfg.text("simulate.baseline", "round_robin");
        if (source == "round_robin")
            policy = env::round_robin_policy();
        else if (source == "greedy")
            policy = env::greedy_policy();
        else if (source == "random")
            policy = env::random_policy(seed);
        else
            throw ConfigError("unknown baseline: " + source + " (round_robin, greedy, random)");
    }

    const auto result = env::run_episode(environment, policy);
    const std::string meta = metadata_line("simulate", seed);
    write_text_file(ctx.out / "episode.csv", "# " + meta + "\n" + env::episode_csv(result));
    double total = 0.0;
    for (double r : result.rewards) total += r;
    CsvTable metrics({"source", "response_time", "energy", "weighted_cost", "failures", "total_reward",
                      "baseline_rt", "baseline_ec"});
    metrics.add_row({source, cell(result.response_time), cell(result.energy), cell(result.weighted_cost),
                     cell(result.failures), cell(total), cell(reward.baseline_rt), cell(reward.baseline_ec)});
    metrics.write(ctx.out / "metrics.csv", meta);
    log << source << ": weighted cost " << format_number(result.weighted_cost) << "\n";
}

}  // namespace

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::place: return "place";
        case Mode::train: return "train";
        case Mode::train_dist: return "train-dist";
        case Mode::worker: return "worker";
        case Mode::simulate: return "simulate";
        case Mode::oracle: return "oracle";
        case Mode::bench: return "bench";
    }
    return "unknown";
}

Mode mode_from_string(const std::string& text) {
    for (auto m : {Mode::place, Mode::train, Mode::train_dist, Mode::worker, Mode::simulate, Mode::oracle,
                   Mode::bench})
        if (to_string(m) == text) return m;
    throw ConfigError("unknown command: " + text);
}

void run_command(Mode mode, const RunContext& ctx, std::ostream& log) {
    switch (mode) {
        case Mode::place: return cmd_place(ctx, log);
        case Mode::train: return cmd_train(ctx, log);
        case Mode::train_dist: return cmd_train_dist(ctx, log);
        case Mode::worker: return cmd_worker(ctx, log);
        case Mode::simulate: return cmd_simulate(ctx, log);
        case Mode::oracle: return cmd_oracle(ctx, log);
        case Mode::bench: return cmd_bench(ctx, log);
    }
}

}  // namespace reinfog::experiments
