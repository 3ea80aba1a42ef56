#pragma once

#include <cstddef>
#include <vector>

namespace reinfog::drl {

struct Experience {
    std::vector<double> state;
    std::size_t action = 0;
    double reward = 0.0;
    std::vector<double> next_state;
    bool done = false;

    bool operator==(const Experience&) const = default;
};

}  // namespace reinfog::drl
