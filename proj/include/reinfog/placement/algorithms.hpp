#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reinfog/core/model.hpp"
#include "reinfog/placement/operators.hpp"

namespace reinfog::placement {

enum class Algorithm { madcp, ga, fa, pso, random };

std::string to_string(Algorithm algo);
Algorithm algorithm_from_string(const std::string& text);
PlacementParams default_params(Algorithm algo);

struct GenerationRecord {
    std::size_t generation = 0;  ///< 0 is the initialized population
    double best_fitness = 0.0;
    double best_objective = 0.0;
    bool feasible = false;
    double elapsed_ms = 0.0;  ///< wall time since the run started
};

struct RunTrace {
    std::vector<GenerationRecord> generations;
    double wall_ms = 0.0;
};

struct PlacementResult {
    Assignment assignment;
    double fitness = 0.0;
    double objective = 0.0;
    bool feasible = false;
    RunTrace trace;
};

/// Memetic loop: GA offspring, then firefly movement, then PSO update, then
/// personal/global best bookkeeping, once per generation. The global best is
/// kept outside the population and never gets worse.
PlacementResult madcp_run(const PlacementInstance& inst, const PlacementParams& params);
PlacementResult ga_run(const PlacementInstance& inst, const PlacementParams& params);
PlacementResult fa_run(const PlacementInstance& inst, const PlacementParams& params);
PlacementResult pso_run(const PlacementInstance& inst, const PlacementParams& params);
/// A single uniformly random assignment, reported as a one-row trace.
PlacementResult random_run(const PlacementInstance& inst, const PlacementParams& params);

PlacementResult run_algorithm(Algorithm algo, const PlacementInstance& inst, const PlacementParams& params);

}  // namespace reinfog::placement
