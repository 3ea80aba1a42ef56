// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "reinfog/core/metrics.hpp"
#include "reinfog/dist/centralized.hpp"
#include "reinfog/dist/learner.hpp"
#include "reinfog/dist/worker.hpp"
#include "reinfog/drl/exploration.hpp"
#include "reinfog/drl/network.hpp"
#include "reinfog/drl/replay.hpp"
#include "reinfog/env/baselines.hpp"
#include "reinfog/env/simulator.hpp"
#include "reinfog/env/workload.hpp"
#include "reinfog/experiments/csv.hpp"
#include "reinfog/placement/algorithms.hpp"
#include "reinfog/placement/brute_force.hpp"
#include "reinfog/placement/instance_gen.hpp"

using namespace reinfog;
using namespace std::chrono_literals;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v, int precision = 4) {
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    return k % 2 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

bool same_objective(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); }

// ------------------------------------------------------------------ placement

Outcome oracle_equivalence() {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> comps(2, 5), nodes(2, 4);
    int hits = 0;
    double slowest = 0.0;
    for (int i = 0; i < 100; ++i) {
        placement::InstanceSpec spec;
        spec.components = comps(rng);
        spec.nodes = nodes(rng);
        const auto inst = placement::generate_instance(spec, 1000 + i);
        const auto opt = placement::brute_force_optimal(inst);
        auto params = placement::PlacementParams::madcp_defaults();
        params.rng_seed = 5000 + i;
        const auto t0 = Clock::now();
        const auto res = placement::madcp_run(inst, params);
        slowest = std::max(slowest, seconds_since(t0));
        hits += res.feasible && same_objective(res.objective, opt.objective);
    }
    return {hits >= 95 && slowest <= 2.0,
            std::to_string(hits) + "/100 optimal, slowest run " + fmt(slowest) + " s (need >= 95, <= 2 s)"};
}

Outcome madcp_dominance() {
    using placement::Algorithm;
    const std::vector<Algorithm> rivals{Algorithm::ga, Algorithm::fa, Algorithm::pso};
    std::map<Algorithm, std::vector<double>> best;
    const auto t0 = Clock::now();
    for (int i = 0; i < 30; ++i) {
        placement::InstanceSpec spec;
        spec.components = 20;
        spec.nodes = 10;
        const auto inst = placement::generate_instance(spec, 2000 + i);
        for (auto algo : {Algorithm::madcp, Algorithm::ga, Algorithm::fa, Algorithm::pso}) {
            auto params = placement::default_params(algo);
            params.generations = 100;
            params.rng_seed = 7000 + i;
            best[algo].push_back(placement::run_algorithm(algo, inst, params).fitness);
        }
    }
    const double elapsed = seconds_since(t0);
    auto mean = [](const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); };
    bool pass = elapsed <= 600.0;
    std::string detail = "mean madcp " + fmt(mean(best[Algorithm::madcp]), 6);
    for (auto algo : rivals) {
        int wins = 0;
        for (std::size_t i = 0; i < 30; ++i)
            wins += best[Algorithm::madcp][i] >= best[algo][i] - 1e-9 * std::abs(best[algo][i]);
        const bool ok = mean(best[Algorithm::madcp]) >= mean(best[algo]) && wins >= 21;
        pass = pass && ok;
        detail += "; " + placement::to_string(algo) + " mean " + fmt(mean(best[algo]), 6) + " win/tie " +
                  std::to_string(wins) + "/30";
    }
    return {pass, detail + "; " + fmt(elapsed) + " s"};
}

Outcome monotone_best() {
    std::mt19937_64 rng(303);
    const std::vector<placement::Algorithm> algos{placement::Algorithm::madcp, placement::Algorithm::ga,
                                                  placement::Algorithm::fa, placement::Algorithm::pso};
    std::uniform_int_distribution<std::size_t> pick(0, 3), comps(2, 15), nodes(2, 8), pop(4, 40), gens(5, 30);
    int bad = 0;
    for (int run = 0; run < 1000; ++run) {
        placement::InstanceSpec spec;
        spec.components = comps(rng);
        spec.nodes = nodes(rng);
        const auto inst = placement::generate_instance(spec, rng());
        const auto algo = algos[pick(rng)];
        auto params = placement::default_params(algo);
        params.population_size = pop(rng);
        params.generations = gens(rng);
        params.rng_seed = rng();
        const auto res = placement::run_algorithm(algo, inst, params);
        const auto& g = res.trace.generations;
        for (std::size_t k = 1; k < g.size(); ++k)
            if (g[k].best_fitness < g[k - 1].best_fitness) {
                ++bad;
                break;
            }
    }
    return {bad == 0, std::to_string(bad) + " of 1000 runs with a decreasing best"};
}

Outcome complexity_scaling() {
    placement::InstanceSpec spec;
    spec.components = 20;
    spec.nodes = 10;
    const auto inst = placement::generate_instance(spec, 404);
    auto per_generation = [&](std::size_t p) {
        auto params = placement::PlacementParams::madcp_defaults();
        params.population_size = p;
        params.generations = 40;
        params.rng_seed = 9;
        const auto res = placement::madcp_run(inst, params);
        std::vector<double> d;
        const auto& g = res.trace.generations;
        for (std::size_t k = 1; k < g.size(); ++k) d.push_back(g[k].elapsed_ms - g[k - 1].elapsed_ms);
        return median(d);
    };
    per_generation(100);  // warm caches
    std::vector<double> ratios;
    double m100 = 0.0, m200 = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        m100 = per_generation(100);
        m200 = per_generation(200);
        ratios.push_back(m200 / m100);
    }
    const double r = median(ratios);
    return {r >= 2.5 && r <= 6.0,
            "median per-generation ms " + fmt(m100) + " -> " + fmt(m200) + ", ratio " + fmt(r) + " (need [2.5, 6])"};
}

// ------------------------------------------------------------------- metrics

Outcome metric_exactness() {
    // A: 100 Mc/s, 10 W. B: 200 Mc/s, 20 W. User links move 1 MB in 0.25 + 0.25 s,
    // node links in 0.5 + 0.5 s. Tasks 1, 2, 4 on A and task 3 on B:
    //   1: ready 0.5, runs 0.5-1.5, 10 J
    //   2: ready 1.5, runs 1.5-2.5, 10 J
    //   3: ready 1.5 + 1 = 2.5, runs 2.5-3.5 (200 Mc at 200 Mc/s), 20 J
    //   4: ready max(2.5, 3.5 + 1) = 4.5, runs 4.5-5.5, 10 J
    // Response time 5.5, energy 50, critical path 1-3-4.
    const auto cluster = env::ClusterSpec::fully_connected({Node(0, 100, 100, 10), Node(1, 200, 100, 20)},
                                                           env::Link{0.5, 2.0}, env::Link{0.25, 4.0});
    const AppDag dag(0, {{1, 100, 1, 1, {}}, {2, 100, 1, 1, {1}}, {3, 200, 1, 1, {1}}, {4, 100, 1, 1, {2, 3}}});
    const auto s = env::simulate_schedule(cluster, dag, {0, 0, 1, 0});
    const std::vector<double> start{0.5, 1.5, 2.5, 4.5}, finish{1.5, 2.5, 3.5, 5.5}, energy{10, 10, 20, 10};
    bool ok = s.records.size() == 4;
    for (std::size_t i = 0; ok && i < 4; ++i)
        ok = s.records[i].start == start[i] && s.records[i].finish == finish[i] && s.records[i].energy == energy[i] &&
             s.records[i].success;
    const std::vector<AppDag> dags{dag};
    const std::vector<ScheduleConfig> scheds{s};
    const double rt = response_time(dags, scheds);
    const double ec = energy_consumption(dags, scheds);
    // Against a baseline twice as slow and twice as hungry: 0.5 * 0.5 + 0.5 * 0.5.
    const double wc = weighted_cost(rt, ec, 11.0, 100.0);
    ok = ok && rt == 5.5 && ec == 50.0 && wc == 0.5 && critical_path(dag, s) == std::vector<int>{1, 3, 4};

    env::SchedulingEnv environment(cluster, dags, env::RewardSpec{});
    for (std::size_t a : {0, 0, 1, 0}) environment.step(a);
    const auto res = environment.result();
    ok = ok && res.response_time == 5.5 && res.energy == 50.0;

    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(1e-3, 1e6), w(0.0, 1.0);
    int unit = 0;
    for (int i = 0; i < 10000; ++i) {
        const double b_rt = u(rng), b_ec = u(rng), w1 = w(rng);
        unit += weighted_cost(b_rt, b_ec, b_rt, b_ec, w1, 1.0 - w1) == 1.0;
    }
    return {ok && unit == 10000, "diamond rt " + fmt(rt, 17) + " energy " + fmt(ec, 17) + " wc " + fmt(wc, 17) +
                                     "; wc(b, b) == 1 in " + std::to_string(unit) + "/10000"};
}

Outcome ghg_formula() {
    const std::vector<EmissionSource> mix{{700.0, 0.5}, {50.0, 0.5}};
    const double g = ghg_emissions(2.0, mix);
    // 3 kWh over coal 820 (0.25), gas 490 (0.25), wind 12 (0.5): 615 + 367.5 + 18.
    const std::vector<EmissionSource> mix2{{820.0, 0.25}, {490.0, 0.25}, {12.0, 0.5}};
    const double g2 = ghg_emissions(3.0, mix2);
    return {g == 750.0 && g2 == 1000.5, "2 kWh -> " + fmt(g, 17) + " g; 3 kWh -> " + fmt(g2, 17) + " g"};
}

// ----------------------------------------------------------------------- drl

Outcome dqn_convergence() {
    const auto cluster = env::reference_cluster();
    const auto wl = env::generate_workload(env::reference_workload_spec(), 1);
    const auto spec = env::make_reward_spec(cluster, wl);
    const double greedy = env::baseline_greedy(cluster, wl, spec).weighted_cost;
    double random = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) random += env::baseline_random(cluster, wl, spec, s).weighted_cost;
    random /= 50;

    dist::TrainingConfig tc;
    tc.episodes = 500;
    tc.seed = 1;
    env::SchedulingEnv environment(cluster, wl, spec);
    const auto t0 = Clock::now();
    const auto res = dist::centralized_mode(environment, tc);
    const double elapsed = seconds_since(t0);
    double last = 0.0;
    for (std::size_t i = res.trace.size() - 50; i < res.trace.size(); ++i) last += res.trace[i].weighted_cost;
    last /= 50;
    const bool vs_random = last <= 0.8 * random;
    const bool vs_greedy = last <= 1.1 * greedy;
    return {vs_random && vs_greedy && elapsed <= 300.0,
            "last-50 mean wc " + fmt(last) + "; random " + fmt(random) + " (ratio " + fmt(last / random) +
                ", need <= 0.8: " + (vs_random ? "ok" : "miss") + "); greedy " + fmt(greedy) + " (ratio " +
                fmt(last / greedy) + ", need <= 1.1: " + (vs_greedy ? "ok" : "miss") + "); " + fmt(elapsed) + " s"};
}

Outcome gradient_check() {
    drl::Rng rng(707);
    std::uniform_int_distribution<std::size_t> width(1, 8), depth(1, 3), pick_layer(0, 2);
    std::normal_distribution<double> normal(0.0, 1.0);
    double worst = 0.0;
    for (int probe = 0; probe < 100; ++probe) {
        std::vector<std::size_t> sizes{width(rng)};
        const std::size_t layers = depth(rng);
        for (std::size_t l = 0; l < layers; ++l) sizes.push_back(width(rng));
        auto net = drl::make_network(sizes, probe % 2 ? drl::Activation::tanh : drl::Activation::relu, rng);
        for (auto& b : net.biases)
            for (auto& x : b) x = 0.1 * normal(rng);
        std::vector<double> input(sizes.front()), coef(sizes.back());
        for (auto& x : input) x = normal(rng);
        for (auto& c : coef) c = normal(rng);
        auto loss = [&](const drl::NetworkParams& n) {
            const auto out = drl::forward(n, input);
            return std::inner_product(out.begin(), out.end(), coef.begin(), 0.0);
        };
        auto grads = drl::zeros_like(net);
        drl::backward(net, drl::forward_cached(net, input), coef, grads);
        const double h = 1e-6;
        for (std::size_t l = 0; l < net.layer_count(); ++l)
            for (int bias = 0; bias < 2; ++bias) {
                auto& p = bias ? net.biases[l] : net.weights[l];
                const auto& gp = bias ? grads.biases[l] : grads.weights[l];
                for (std::size_t k = 0; k < p.size(); ++k) {
                    const double keep = p[k];
                    p[k] = keep + h;
                    const double up = loss(net);
                    p[k] = keep - h;
                    const double down = loss(net);
                    p[k] = keep;
                    const double numeric = (up - down) / (2 * h);
                    const double err = std::abs(gp[k] - numeric) /
                                       std::max({std::abs(gp[k]), std::abs(numeric), 1e-7});
                    worst = std::max(worst, err);
                }
            }
    }
    return {worst <= 1e-4, "worst relative error " + fmt(worst) + " over 100 networks (need <= 1e-4)"};
}

Outcome sampling_statistics() {
    drl::Rng rng(808);
    std::string detail;
    bool pass = true;

    // Reservoir: per-item inclusion counts against Binomial(trials, k/N).
    const std::size_t k = 100, n = 10000;
    const int trials = 1000;
    std::vector<int> included(n, 0);
    for (int t = 0; t < trials; ++t) {
        drl::ReservoirReplayBuffer<std::size_t> res(k);
        for (std::size_t i = 0; i < n; ++i) res.push(i, rng);
        for (std::size_t v : res.items()) ++included[v];
    }
    const double p = static_cast<double>(k) / n;
    const double sd = std::sqrt(trials * p * (1 - p));
    std::size_t outside = 0;
    for (int c : included) outside += std::abs(c - trials * p) > 3.0 * sd;
    // 0.27% of items fall outside 3 sigma by chance; allow for that plus noise.
    const double overall = std::accumulate(included.begin(), included.end(), 0.0) / (double(trials) * n);
    const bool res_ok = outside <= n / 100 && std::abs(overall - p) <= 1e-12;
    pass = pass && res_ok;
    detail += "reservoir " + std::to_string(outside) + "/10000 items beyond 3 sigma";

    // Epsilon-greedy: random actions land on the greedy one a quarter of the time.
    const std::vector<double> q{0.0, 5.0, 1.0, 2.0};
    const int draws = 10000;
    int off = 0;
    for (int i = 0; i < draws; ++i) off += drl::eps_greedy(q, 0.3, rng) != 1;
    const double pe = 0.3 * 3.0 / 4.0;
    const double z_eps = (off - draws * pe) / std::sqrt(draws * pe * (1 - pe));
    pass = pass && std::abs(z_eps) <= 3.0;
    detail += "; eps-greedy z " + fmt(z_eps, 3);

    // OU: the AR(1) autocorrelation inflates the standard error of the mean.
    drl::OuNoiseState st;
    st.mu = 0.5;
    st.x = {0.5};
    const int steps = 100000;
    double sum = 0.0;
    for (int i = 0; i < steps; ++i) {
        auto [next, sample] = drl::ou_step(std::move(st), rng);
        st = std::move(next);
        sum += sample[0];
    }
    const double phi = 1.0 - st.theta * st.dt;
    const double var = st.sigma * st.sigma * st.dt / (1.0 - phi * phi);
    const double se = std::sqrt(var / steps * (1.0 + phi) / (1.0 - phi));
    const double z_ou = (sum / steps - st.mu) / se;
    pass = pass && std::abs(z_ou) <= 3.0;
    detail += "; OU mean z " + fmt(z_ou, 3);
    return {pass, detail};
}

// ---------------------------------------------------------------------- dist

env::SchedulingEnv toy_env() {
    const auto cluster = env::reference_cluster();
    env::WorkloadSpec ws;
    ws.app_count = 3;
    ws.tasks_per_app = 3;
    ws.layers = 2;
    const auto wl = env::generate_workload(ws, 1);
    return env::SchedulingEnv(cluster, wl, env::make_reward_spec(cluster, wl));
}

dist::TrainingConfig toy_training(std::uint64_t seed, std::size_t episodes) {
    dist::TrainingConfig t;
    t.seed = seed;
    t.episodes = episodes;
    t.dqn.hidden_layers = {16, 8};
    t.dqn.batch_size = 8;
    t.dqn.epsilon.decay_steps = 100;
    t.sync.batch_flush = 4;
    t.sync.sync_interval = 3;
    return t;
}

struct DistRun {
    dist::LearnerReport learner;
    std::vector<dist::WorkerReport> workers;
    std::size_t worker_errors = 0;
};

DistRun run_distributed(const env::SchedulingEnv& environment, const dist::TrainingConfig& t, std::size_t workers,
                        bool lockstep, std::uint64_t max_updates, bool record) {
    const auto initial = dist::initial_network(environment.state_size(), environment.action_count(), t.dqn, t.seed);
    dist::LearnerConfig lc;
    lc.sync = t.sync;
    lc.expected_workers = workers;
    lc.lockstep = lockstep;
    lc.max_updates = max_updates;
    dist::LearnerServer server(
        {"127.0.0.1", 0},
        dist::LearnerCore(drl::DqnAgent(initial, t.dqn), t.sync, dist::derive_seed(t.seed, dist::kLearnerStream)), lc,
        record);
    server.start();
    DistRun out;
    out.workers.resize(workers);
    std::vector<int> failed(workers, 0);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            dist::WorkerConfig cfg;
            cfg.worker_id = static_cast<std::uint32_t>(w);
            cfg.episodes = t.episodes;
            cfg.sync = t.sync;
            cfg.epsilon = t.dqn.epsilon;
            cfg.lockstep = lockstep;
            cfg.seed = t.seed;
            try {
                out.workers[w] = dist::worker_loop({"127.0.0.1", server.port()}, environment, initial, cfg);
            } catch (const std::exception&) {
                failed[w] = 1;
            }
        });
    for (auto& th : threads) th.join();
    server.request_stop();
    out.learner = server.wait();
    out.worker_errors = std::accumulate(failed.begin(), failed.end(), std::size_t{0});
    return out;
}

dist::WireMessage random_message(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3), small(0, 6);
    std::uniform_real_distribution<double> real(-1e6, 1e6);
    auto vec = [&](std::size_t n) {
        std::vector<double> v(n);
        for (auto& x : v) x = real(rng);
        return v;
    };
    switch (kind(rng)) {
        case 0: return dist::WorkerHello{static_cast<std::uint32_t>(rng()), std::to_string(small(rng))};
        case 1: {
            dist::ExperienceBatch b{static_cast<std::uint32_t>(rng()), rng(), {}};
            const std::size_t dim = 1 + small(rng);
            for (int i = small(rng); i > 0; --i)
                b.experiences.push_back({vec(dim), static_cast<std::size_t>(small(rng)), real(rng), vec(dim),
                                         static_cast<bool>(rng() & 1)});
            return b;
        }
        case 2: {
            drl::Rng init(rng());
            return dist::PolicySync{rng(), drl::make_network({1 + static_cast<std::size_t>(small(rng)), 4, 3},
                                                             drl::Activation::relu, init)};
        }
        default: {
            std::string reason;
            for (int i = small(rng); i > 0; --i) reason += static_cast<char>(' ' + small(rng) * 13);
            return dist::Shutdown{reason + "\t\"\\"};
        }
    }
}

Outcome protocol_integrity() {
    std::mt19937_64 rng(909);
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto msg = random_message(rng);
        mismatches += !(dist::decode_frame(dist::encode_frame(msg)) == msg);
    }
    std::string detail = std::to_string(mismatches) + "/10000 round-trip mismatches";
    bool pass = mismatches == 0;

    const auto environment = toy_env();
    const auto t = toy_training(31, 15);
    auto run = run_distributed(environment, t, 3, false, 0, true);
    std::size_t sent = 0;
    bool versions_ok = true;
    for (const auto& w : run.workers) {
        sent += w.experiences_sent;
        versions_ok = versions_ok && std::is_sorted(w.decision_versions.begin(), w.decision_versions.end()) &&
                      std::is_sorted(w.applied_versions.begin(), w.applied_versions.end());
    }
    std::set<std::pair<std::uint32_t, std::uint64_t>> keys;
    std::size_t counted = 0;
    for (const auto& b : run.learner.batches) {
        keys.insert({b.worker_id, b.seq});
        counted += b.experiences.size();
    }
    const std::size_t expected = 3 * t.episodes * environment.decision_count();
    const bool lossless = run.worker_errors == 0 && sent == expected && counted == expected &&
                          run.learner.experiences_received == expected && keys.size() == run.learner.batches.size() &&
                          run.learner.rejections.empty();
    pass = pass && lossless && versions_ok;
    detail += "; 3 workers sent " + std::to_string(sent) + ", learner got " + std::to_string(counted) + " in " +
              std::to_string(keys.size()) + " distinct batches (expected " + std::to_string(expected) + ")" +
              "; versions non-decreasing: " + (versions_ok ? "yes" : "no");

    auto central_env = toy_env();
    const auto t1 = toy_training(32, 15);
    const auto central = dist::centralized_mode(central_env, t1);
    auto single = run_distributed(environment, t1, 1, true, 0, false);
    const bool same = single.learner.updates == central.updates && single.learner.policy == central.policy;
    pass = pass && same;
    detail += "; workers=1 updates " + std::to_string(single.learner.updates) + " vs centralized " +
              std::to_string(central.updates) + (single.learner.policy == central.policy ? ", same policy" : ", policy differs");
    return {pass, detail};
}

Outcome scalability_smoke() {
    const auto cluster = env::reference_cluster();
    const auto wl = env::generate_workload(env::reference_workload_spec(), 10);
    const env::SchedulingEnv environment(cluster, wl, env::make_reward_spec(cluster, wl));
    dist::TrainingConfig t;
    t.seed = 10;
    t.episodes = 1000;  // far more than 100 updates need; the learner stops them
    const auto t0 = Clock::now();
    auto run = run_distributed(environment, t, 30, false, 100, false);
    const double elapsed = seconds_since(t0);
    std::set<std::uint32_t> heard;
    for (const auto& a : run.learner.arrivals) heard.insert(a.worker_id);
    std::size_t stopped = 0;
    for (const auto& w : run.workers) stopped += w.stopped_by_learner;
    // A learner shutdown reaches only workers that connected and said hello.
    const bool pass = run.worker_errors == 0 && run.learner.updates == 100 && stopped == 30 && elapsed <= 120.0;
    return {pass, std::to_string(stopped) + "/30 connected and stopped cleanly, " +
                      std::to_string(run.learner.updates) + " updates, " + std::to_string(heard.size()) +
                      " workers contributed batches, " +
                      std::to_string(run.worker_errors) + " errors, " + fmt(elapsed) + " s (" +
                      run.learner.stop_reason + ")"};
}

// ----------------------------------------------------------------------- cli

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& out) {
    fs::remove_all(out);
    fs::create_directories(out);
    const std::string cmd = std::string(REINFOG_CLI_PATH) + " " + args + " --out " + out.string() + " > " +
                            (out / "log.txt").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Compares every CSV body under two output directories.
std::string compare_outputs(const fs::path& a, const fs::path& b) {
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        if (entry.path().extension() != ".csv") continue;
        ++files;
        const auto other = b / entry.path().filename();
        if (!fs::exists(other)) return "missing " + other.filename().string();
        if (experiments::strip_metadata(slurp(entry.path())) != experiments::strip_metadata(slurp(other)))
            return entry.path().filename().string() + " differs";
    }
    return files == 0 ? "no csv written" : "";
}

// A worker process against an in-process lockstep learner with the CLI defaults.
int run_worker_cli(const fs::path& out) {
    const auto cluster = env::reference_cluster();
    dist::TrainingConfig t;
    const std::uint64_t seed = 12;
    const auto initial = dist::initial_network(env::state_size(cluster.node_count()), cluster.node_count(), t.dqn, seed);
    dist::LearnerConfig lc;
    lc.sync = t.sync;
    lc.expected_workers = 1;
    lc.lockstep = true;
    dist::LearnerServer server(
        {"127.0.0.1", 0},
        dist::LearnerCore(drl::DqnAgent(initial, t.dqn), t.sync, dist::derive_seed(seed, dist::kLearnerStream)), lc);
    server.start();
    const int code = run_cli("worker --seed 12 --episodes 3 --set workload.apps=4 --worker-id 0 --connect 127.0.0.1:" +
                                 std::to_string(server.port()),
                             out);
    server.request_stop();
    server.wait();
    return code;
}

Outcome cli_determinism() {
    const fs::path root = fs::temp_directory_path() / "reinfog_acceptance_cli";
    const std::vector<std::pair<std::string, std::string>> modes{
        {"place", "place --seed 3 --reps 2 --set placement.population=30 --set placement.generations=15"},
        {"oracle", "oracle --seed 3"},
        {"bench", "bench --seed 3 --set bench.populations=10,20 --set bench.generations=3"},
        {"train", "train --seed 3 --episodes 6 --set workload.apps=5"},
        {"train-dist", "train-dist --seed 3 --workers 3 --episodes 4 --set workload.apps=5"},
        {"simulate", "simulate --seed 3 --baseline random"},
        {"worker", ""}};
    bool pass = true;
    std::string detail;
    for (const auto& [name, args] : modes) {
        const fs::path a = root / (name + "_a"), b = root / (name + "_b");
        int ca = 0, cb = 0;
        if (name == "worker") {
            ca = run_worker_cli(a);
            cb = run_worker_cli(b);
        } else {
            ca = run_cli(args, a);
            cb = run_cli(args, b);
        }
        std::string verdict = (ca != 0 || cb != 0) ? "exit " + std::to_string(ca) + "/" + std::to_string(cb)
                                                   : compare_outputs(a, b);
        pass = pass && verdict.empty();
        detail += (detail.empty() ? "" : ", ") + name + (verdict.empty() ? " identical" : " " + verdict);
    }
    return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence", oracle_equivalence},   {"madcp dominance", madcp_dominance},
        {"monotone global best", monotone_best},      {"complexity scaling", complexity_scaling},
        {"metric exactness", metric_exactness},       {"dqn toy convergence", dqn_convergence},
        {"gradient check", gradient_check},           {"sampling statistics", sampling_statistics},
        {"protocol integrity", protocol_integrity},   {"scalability smoke", scalability_smoke},
        {"ghg formula", ghg_formula},                 {"cli determinism", cli_determinism}};
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        Outcome o;
        const auto t0 = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << o.detail << " ["
                  << fmt(seconds_since(t0), 3) << " s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
