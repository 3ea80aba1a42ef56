#pragma once

// Evolutionary operators shared by MADCP and the single-phase GA/FA/PSO loops.
// Fitness is to be maximized: -(F + lambda * total violation).

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "reinfog/core/model.hpp"

namespace reinfog::placement {

using Rng = std::mt19937_64;

inline constexpr double kDefaultPenaltyLambda = 1e3;
inline constexpr double kRouletteEpsilon = 1e-6;

struct PlacementParams {
    std::size_t population_size = 200;
    std::size_t generations = 100;
    /// GA operations per generation; 0 means ceil(population_size / 2).
    std::size_t num_operations = 0;
    double crossover_rate = 0.8;
    double mutation_rate = 0.05;
    double fa_alpha = 0.2;
    double fa_beta = 0.8;
    double fa_gamma = 0.5;
    double pso_w = 0.7;
    double pso_c1 = 2.0;
    double pso_c2 = 2.0;
    double penalty_lambda = kDefaultPenaltyLambda;
    std::uint64_t rng_seed = 1;

    /// Throws std::invalid_argument.
    void validate() const;
    std::size_t effective_num_operations() const;

    static PlacementParams madcp_defaults();
    static PlacementParams ga_defaults();
    static PlacementParams fa_defaults();
    static PlacementParams pso_defaults();
};

/// One candidate solution seen as chromosome, firefly and particle at once.
/// Velocity and personal best belong to the population slot, not the genes.
struct Individual {
    Assignment assignment;
    std::vector<double> position;
    std::vector<double> velocity;
    Assignment best_assignment;
    double best_fitness = 0.0;

    /// position := assignment.
    void sync_position();
};

double fitness(const Assignment& a, const PlacementInstance& inst, double lambda);

std::vector<Individual> generate_population(const PlacementInstance& inst, const PlacementParams& params,
                                            Rng& rng);

/// Uniform gene-wise assignment.
Assignment random_placement(const PlacementInstance& inst, Rng& rng);

/// Selection probabilities proportional to f - min(f) + kRouletteEpsilon.
std::vector<double> roulette_probabilities(std::span<const double> fitnesses);

/// Two independent roulette draws; returns population indices (may coincide).
std::pair<std::size_t, std::size_t> select_parents(std::span<const double> fitnesses, Rng& rng);

/// Single-point crossover with an explicit cut k in [1, m-1].
std::pair<Assignment, Assignment> crossover_at(const Assignment& p1, const Assignment& p2, std::size_t cut);

/// Single-point crossover with a uniformly drawn cut; for m = 1 children copy the parents.
std::pair<Assignment, Assignment> crossover(const Assignment& p1, const Assignment& p2, Rng& rng);

/// Each gene is resampled over all `node_count` indices with probability `rate`.
Assignment mutate(Assignment a, double rate, std::size_t node_count, Rng& rng);

std::size_t hamming_distance(const Assignment& a, const Assignment& b);

/// Discrete firefly move. Each individual i is pulled toward every strictly
/// brighter j in turn: every gene is copied from j with probability
/// beta * exp(-gamma * r^2), r being the normalized Hamming distance. An
/// individual that moved then has each gene resampled with probability alpha.
void firefly_movement(std::vector<Individual>& pop, const PlacementInstance& inst, double alpha, double beta,
                      double gamma, double lambda, Rng& rng);

/// New velocity for one coordinate given explicit r1, r2.
double pso_velocity(double v, double x, double pbest, double gbest, double w, double c1, double c2, double r1,
                    double r2);

/// Velocity/position update toward personal and global bests; positions are
/// clamped to [0, n-1] and assignments re-derived by rounding.
void pso_update(std::vector<Individual>& pop, const Assignment& global_best, std::size_t node_count, double w,
                double c1, double c2, Rng& rng);

/// Rounds and clamps a continuous coordinate to a node index.
std::size_t position_to_gene(double x, std::size_t node_count);

}  // namespace reinfog::placement
