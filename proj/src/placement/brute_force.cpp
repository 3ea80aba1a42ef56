#include "reinfog/placement/brute_force.hpp"

#include <cmath>

namespace reinfog::placement {

double search_space_size(const PlacementInstance& inst) {
    return std::pow(static_cast<double>(inst.node_count()), static_cast<double>(inst.component_count()));
}

OptimalPlacement brute_force_optimal(const PlacementInstance& inst) {
    const double size = search_space_size(inst);
    if (size > kBruteForceLimit) throw SearchSpaceTooLarge(size);

    const std::size_t m = inst.component_count();
    const std::size_t n = inst.node_count();
    Assignment cur(std::vector<std::size_t>(m, 0));
    OptimalPlacement best;
    bool found = false;

    while (true) {
        ++best.evaluated;
        if (check_constraints(cur, inst).feasible) {
            const double f = objective(cur, inst);
            if (!found || f < best.objective) {
                best.assignment = cur;
                best.objective = f;
                found = true;
            }
        }
        // Odometer with gene 0 most significant keeps lexicographic order.
        std::size_t d = m;
        while (d > 0 && cur[d - 1] + 1 == n) cur[--d] = 0;
        if (d == 0) break;
        ++cur[d - 1];
    }
    if (!found) throw InfeasibleInstance();
    return best;
}

}  // namespace reinfog::placement
