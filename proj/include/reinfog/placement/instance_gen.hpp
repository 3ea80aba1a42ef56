#pragma once

#include <cstddef>
#include <cstdint>

#include "reinfog/core/model.hpp"

namespace reinfog::placement {

struct InstanceSpec {
    std::size_t components = 5;
    std::size_t nodes = 4;
    double omega1 = 0.5;
    double omega2 = 0.5;
    std::size_t learners = 1;  ///< leading components get the learner role
};

/// Random heterogeneous instance with a planted feasible assignment.
///
/// Node speeds come from power-of-two tiers (50 * 2^k Mc/s) and deadlines equal
/// the operation time on the planted node, so any deadline violation is at
/// least as large as that operation time. Requirements, memory and wattage are
/// integers, which keeps capacity violations >= 1.
PlacementInstance generate_instance(const InstanceSpec& spec, std::uint64_t seed);

}  // namespace reinfog::placement
