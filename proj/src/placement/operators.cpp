#include "reinfog/placement/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reinfog::placement {

namespace {

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

std::size_t uniform_index(std::size_t n, Rng& rng) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::size_t roulette_draw(std::span<const double> weights, double total, Rng& rng) {
    double ticket = uniform01(rng) * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        ticket -= weights[i];
        if (ticket < 0.0) return i;
    }
    return weights.size() - 1;
}

}  // namespace

void PlacementParams::validate() const {
    if (population_size < 2) throw std::invalid_argument("population_size must be >= 2");
    if (generations < 1) throw std::invalid_argument("generations must be >= 1");
    if (num_operations != 0 && 2 * num_operations < population_size)
        throw std::invalid_argument("num_operations must produce at least population_size children");
    auto probability = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!probability(mutation_rate)) throw std::invalid_argument("mutation_rate must be in [0, 1]");
    if (!probability(crossover_rate)) throw std::invalid_argument("crossover_rate must be in [0, 1]");
    if (!probability(fa_alpha)) throw std::invalid_argument("fa_alpha must be in [0, 1]");
    if (!(fa_beta >= 0.0) || !(fa_gamma >= 0.0)) throw std::invalid_argument("fa_beta and fa_gamma must be >= 0");
    if (!(penalty_lambda > 0.0)) throw std::invalid_argument("penalty_lambda must be > 0");
}

std::size_t PlacementParams::effective_num_operations() const {
    return num_operations != 0 ? num_operations : (population_size + 1) / 2;
}

PlacementParams PlacementParams::madcp_defaults() { return PlacementParams{}; }

PlacementParams PlacementParams::ga_defaults() {
    PlacementParams p;
    p.crossover_rate = 0.9;
    p.mutation_rate = 0.05;
    return p;
}

PlacementParams PlacementParams::fa_defaults() {
    PlacementParams p;
    p.population_size = 100;
    p.fa_alpha = 0.2;
    p.fa_beta = 0.8;
    p.fa_gamma = 0.1;
    return p;
}

PlacementParams PlacementParams::pso_defaults() {
    PlacementParams p;
    p.population_size = 100;
    p.pso_w = 0.7;
    p.pso_c1 = 2.0;
    p.pso_c2 = 2.0;
    return p;
}

void Individual::sync_position() {
    position.resize(assignment.size());
    for (std::size_t d = 0; d < assignment.size(); ++d) position[d] = static_cast<double>(assignment[d]);
}

double fitness(const Assignment& a, const PlacementInstance& inst, double lambda) {
    return -(objective(a, inst) + lambda * check_constraints(a, inst).total());
}

Assignment random_placement(const PlacementInstance& inst, Rng& rng) {
    Assignment a(std::vector<std::size_t>(inst.component_count()));
    for (auto& gene : a.node_of) gene = uniform_index(inst.node_count(), rng);
    return a;
}

std::vector<Individual> generate_population(const PlacementInstance& inst, const PlacementParams& params,
                                            Rng& rng) {
    std::vector<Individual> pop(params.population_size);
    std::uniform_real_distribution<double> velocity_dist(-1.0, 1.0);
    for (auto& ind : pop) {
        ind.assignment = random_placement(inst, rng);
        ind.sync_position();
        ind.velocity.resize(inst.component_count());
        for (auto& v : ind.velocity) v = velocity_dist(rng);
        ind.best_assignment = ind.assignment;
        ind.best_fitness = fitness(ind.assignment, inst, params.penalty_lambda);
    }
    return pop;
}

std::vector<double> roulette_probabilities(std::span<const double> fitnesses) {
    if (fitnesses.empty()) throw std::invalid_argument("roulette needs a non-empty population");
    const double lowest = *std::min_element(fitnesses.begin(), fitnesses.end());
    std::vector<double> w(fitnesses.size());
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) total += (w[i] = fitnesses[i] - lowest + kRouletteEpsilon);
    for (auto& x : w) x /= total;
    return w;
}

std::pair<std::size_t, std::size_t> select_parents(std::span<const double> fitnesses, Rng& rng) {
    if (fitnesses.size() < 2) throw std::invalid_argument("selection needs at least two individuals");
    const double lowest = *std::min_element(fitnesses.begin(), fitnesses.end());
    std::vector<double> w(fitnesses.size());
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) total += (w[i] = fitnesses[i] - lowest + kRouletteEpsilon);
    const std::size_t first = roulette_draw(w, total, rng);
    const std::size_t second = roulette_draw(w, total, rng);
    return {first, second};
}

std::pair<Assignment, Assignment> crossover_at(const Assignment& p1, const Assignment& p2, std::size_t cut) {
    if (p1.size() != p2.size()) throw std::invalid_argument("crossover parents differ in length");
    if (p1.size() < 2) return {p1, p2};
    if (cut < 1 || cut >= p1.size()) throw std::invalid_argument("crossover cut out of range");
    Assignment c1 = p1;
    Assignment c2 = p2;
    for (std::size_t d = cut; d < p1.size(); ++d) std::swap(c1[d], c2[d]);
    return {std::move(c1), std::move(c2)};
}

std::pair<Assignment, Assignment> crossover(const Assignment& p1, const Assignment& p2, Rng& rng) {
    if (p1.size() < 2) return {p1, p2};
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(1, p1.size() - 1)(rng);
    return crossover_at(p1, p2, cut);
}

Assignment mutate(Assignment a, double rate, std::size_t node_count, Rng& rng) {
    if (rate <= 0.0) return a;
    for (auto& gene : a.node_of)
        if (uniform01(rng) < rate) gene = uniform_index(node_count, rng);
    return a;
}

std::size_t hamming_distance(const Assignment& a, const Assignment& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

void firefly_movement(std::vector<Individual>& pop, const PlacementInstance& inst, double alpha, double beta,
                      double gamma, double lambda, Rng& rng) {
    const std::size_t m = inst.component_count();
    const std::size_t n = inst.node_count();
    std::vector<double> light(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) light[i] = fitness(pop[i].assignment, inst, lambda);

    for (std::size_t i = 0; i < pop.size(); ++i) {
        bool moved = false;
        for (std::size_t j = 0; j < pop.size(); ++j) {
            if (j == i || !(light[j] > light[i])) continue;
            const double r = static_cast<double>(hamming_distance(pop[i].assignment, pop[j].assignment)) /
                             static_cast<double>(m);
            const double attraction = beta * std::exp(-gamma * r * r);
            for (std::size_t d = 0; d < m; ++d)
                if (uniform01(rng) < attraction) pop[i].assignment[d] = pop[j].assignment[d];
            light[i] = fitness(pop[i].assignment, inst, lambda);
            moved = true;
        }
        if (moved && alpha > 0.0) {
            pop[i].assignment = mutate(std::move(pop[i].assignment), alpha, n, rng);
            light[i] = fitness(pop[i].assignment, inst, lambda);
        }
        pop[i].sync_position();
    }
}

double pso_velocity(double v, double x, double pbest, double gbest, double w, double c1, double c2, double r1,
                    double r2) {
    return w * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x);
}

std::size_t position_to_gene(double x, std::size_t node_count) {
    const double top = static_cast<double>(node_count - 1);
    return static_cast<std::size_t>(std::lround(std::clamp(x, 0.0, top)));
}

void pso_update(std::vector<Individual>& pop, const Assignment& global_best, std::size_t node_count, double w,
                double c1, double c2, Rng& rng) {
    const double top = static_cast<double>(node_count - 1);
    for (auto& ind : pop) {
        for (std::size_t d = 0; d < ind.position.size(); ++d) {
            const double r1 = uniform01(rng);
            const double r2 = uniform01(rng);
            ind.velocity[d] = pso_velocity(ind.velocity[d], ind.position[d],
                                           static_cast<double>(ind.best_assignment[d]),
                                           static_cast<double>(global_best[d]), w, c1, c2, r1, r2);
            ind.position[d] = std::clamp(ind.position[d] + ind.velocity[d], 0.0, top);
            ind.assignment[d] = position_to_gene(ind.position[d], node_count);
        }
    }
}

}  // namespace reinfog::placement
