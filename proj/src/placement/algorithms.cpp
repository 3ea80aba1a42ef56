#include "reinfog/placement/algorithms.hpp"

#include <chrono>
#include <stdexcept>

namespace reinfog::placement {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

enum Phase : unsigned { kGa = 1u, kFa = 2u, kPso = 4u };

class Search {
public:
    Search(const PlacementInstance& inst, const PlacementParams& params)
        : inst_(inst), params_(params), rng_(params.rng_seed), start_(Clock::now()) {
        params_.validate();
        pop_ = generate_population(inst_, params_, rng_);
        best_ = pop_.front().assignment;
        best_fitness_ = pop_.front().best_fitness;
        for (const auto& ind : pop_) {
            if (ind.best_fitness > best_fitness_) {
                best_fitness_ = ind.best_fitness;
                best_ = ind.assignment;
            }
        }
        record(0);
    }

    PlacementResult run(unsigned phases) {
        for (std::size_t g = 1; g <= params_.generations; ++g) {
            if (phases & kGa) ga_phase();
            if (phases & kFa)
                firefly_movement(pop_, inst_, params_.fa_alpha, params_.fa_beta, params_.fa_gamma,
                                 params_.penalty_lambda, rng_);
            if (phases & kPso)
                pso_update(pop_, best_, inst_.node_count(), params_.pso_w, params_.pso_c1, params_.pso_c2, rng_);
            update_bests();
            record(g);
        }
        return finish();
    }

private:
    void ga_phase() {
        std::vector<double> fit(pop_.size());
        for (std::size_t i = 0; i < pop_.size(); ++i) fit[i] = evaluate(pop_[i].assignment);

        std::vector<Individual> next = pop_;
        const std::size_t n = inst_.node_count();
        std::size_t slot = 0;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (std::size_t op = 0; op < params_.effective_num_operations() && slot < next.size(); ++op) {
            auto [i1, i2] = select_parents(fit, rng_);
            auto children = coin(rng_) < params_.crossover_rate
                                ? crossover(pop_[i1].assignment, pop_[i2].assignment, rng_)
                                : std::pair{pop_[i1].assignment, pop_[i2].assignment};
            Assignment c1 = mutate(std::move(children.first), params_.mutation_rate, n, rng_);
            Assignment c2 = mutate(std::move(children.second), params_.mutation_rate, n, rng_);
            for (Assignment* child : {&c1, &c2}) {
                if (slot == next.size()) break;
                next[slot].assignment = std::move(*child);
                next[slot].sync_position();
                ++slot;
            }
        }
        pop_ = std::move(next);
    }

    void update_bests() {
        for (auto& ind : pop_) {
            const double f = evaluate(ind.assignment);
            if (f > ind.best_fitness) {
                ind.best_fitness = f;
                ind.best_assignment = ind.assignment;
            }
            if (f > best_fitness_) {
                best_fitness_ = f;
                best_ = ind.assignment;
            }
        }
    }

    double evaluate(const Assignment& a) const { return fitness(a, inst_, params_.penalty_lambda); }

    void record(std::size_t generation) {
        trace_.generations.push_back({generation, best_fitness_, objective(best_, inst_),
                                      check_constraints(best_, inst_).feasible, ms_since(start_)});
    }

    PlacementResult finish() {
        trace_.wall_ms = ms_since(start_);
        PlacementResult out;
        out.assignment = best_;
        out.fitness = best_fitness_;
        out.objective = objective(best_, inst_);
        out.feasible = check_constraints(best_, inst_).feasible;
        out.trace = std::move(trace_);
        return out;
    }

    const PlacementInstance& inst_;
    PlacementParams params_;
    Rng rng_;
    Clock::time_point start_;
    std::vector<Individual> pop_;
    Assignment best_;
    double best_fitness_ = 0.0;
    RunTrace trace_;
};

}  // namespace

std::string to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::madcp: return "madcp";
        case Algorithm::ga: return "ga";
        case Algorithm::fa: return "fa";
        case Algorithm::pso: return "pso";
        case Algorithm::random: return "random";
    }
    return "unknown";
}

Algorithm algorithm_from_string(const std::string& text) {
    for (auto algo : {Algorithm::madcp, Algorithm::ga, Algorithm::fa, Algorithm::pso, Algorithm::random})
        if (to_string(algo) == text) return algo;
    throw std::invalid_argument("unknown placement algorithm: " + text);
}

PlacementParams default_params(Algorithm algo) {
    switch (algo) {
        case Algorithm::ga: return PlacementParams::ga_defaults();
        case Algorithm::fa: return PlacementParams::fa_defaults();
        case Algorithm::pso: return PlacementParams::pso_defaults();
        case Algorithm::madcp:
        case Algorithm::random: break;
    }
    return PlacementParams::madcp_defaults();
}

PlacementResult madcp_run(const PlacementInstance& inst, const PlacementParams& params) {
    return Search(inst, params).run(kGa | kFa | kPso);
}

PlacementResult ga_run(const PlacementInstance& inst, const PlacementParams& params) {
    return Search(inst, params).run(kGa);
}

PlacementResult fa_run(const PlacementInstance& inst, const PlacementParams& params) {
    return Search(inst, params).run(kFa);
}

PlacementResult pso_run(const PlacementInstance& inst, const PlacementParams& params) {
    return Search(inst, params).run(kPso);
}

PlacementResult random_run(const PlacementInstance& inst, const PlacementParams& params) {
    const auto start = Clock::now();
    Rng rng(params.rng_seed);
    PlacementResult out;
    out.assignment = random_placement(inst, rng);
    out.fitness = fitness(out.assignment, inst, params.penalty_lambda);
    out.objective = objective(out.assignment, inst);
    out.feasible = check_constraints(out.assignment, inst).feasible;
    out.trace.wall_ms = ms_since(start);
    out.trace.generations.push_back({0, out.fitness, out.objective, out.feasible, out.trace.wall_ms});
    return out;
}

PlacementResult run_algorithm(Algorithm algo, const PlacementInstance& inst, const PlacementParams& params) {
    switch (algo) {
        case Algorithm::madcp: return madcp_run(inst, params);
        case Algorithm::ga: return ga_run(inst, params);
        case Algorithm::fa: return fa_run(inst, params);
        case Algorithm::pso: return pso_run(inst, params);
        case Algorithm::random: return random_run(inst, params);
    }
    throw std::invalid_argument("unknown placement algorithm");
}

}  // namespace reinfog::placement
