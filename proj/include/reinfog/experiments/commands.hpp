#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "reinfog/experiments/config.hpp"

namespace reinfog::experiments {

enum class Mode { place, train, train_dist, worker, simulate, oracle, bench };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

struct RunContext {
    ExperimentConfig config;
    std::filesystem::path out = "results";
    /// Fill wall-clock columns; they are left empty otherwise so that
    /// identical invocations write identical CSV bodies.
    bool timing = false;
    /// Learner endpoint for the worker mode; falls back to REINFOG_LEARNER_ADDR.
    std::string connect;
    std::uint32_t worker_id = 0;
};

/// Runs one command. Throws ConfigError for usage/config problems and other
/// exceptions for runtime failures.
void run_command(Mode mode, const RunContext& ctx, std::ostream& log);

}  // namespace reinfog::experiments
