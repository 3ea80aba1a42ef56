#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "reinfog/core/model.hpp"

namespace reinfog::placement {

inline constexpr double kBruteForceLimit = 1e7;

class SearchSpaceTooLarge : public std::length_error {
public:
    explicit SearchSpaceTooLarge(double size)
        : std::length_error("search space of " + std::to_string(size) + " assignments exceeds the limit of 1e7"),
          size_(size) {}
    double size() const noexcept { return size_; }

private:
    double size_;
};

class InfeasibleInstance : public std::runtime_error {
public:
    InfeasibleInstance() : std::runtime_error("infeasible instance") {}
};

struct OptimalPlacement {
    Assignment assignment;
    double objective = 0.0;
    std::uint64_t evaluated = 0;
};

/// n^m as a double (may be huge).
double search_space_size(const PlacementInstance& inst);

/// Exhaustive search in lexicographic order; feasible argmin of F with the first
/// (lexicographically smallest) assignment winning ties.
OptimalPlacement brute_force_optimal(const PlacementInstance& inst);

}  // namespace reinfog::placement
