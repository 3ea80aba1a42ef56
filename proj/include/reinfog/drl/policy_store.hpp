#pragma once

// Trained policy repository: versioned JSON documents holding network
// parameters plus free-form metadata.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "reinfog/drl/network.hpp"

namespace reinfog::drl {

inline constexpr const char* kPolicyFormatVersion = "1";

class PolicyFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StoredPolicy {
    NetworkParams network;
    nlohmann::json metadata = nlohmann::json::object();
};

nlohmann::json network_to_json(const NetworkParams& net);
/// Throws PolicyFormatError on schema or shape problems.
NetworkParams network_from_json(const nlohmann::json& j);

void save_policy(const NetworkParams& net, const std::filesystem::path& path,
                 const nlohmann::json& metadata = nlohmann::json::object());
StoredPolicy load_policy(const std::filesystem::path& path);

}  // namespace reinfog::drl
