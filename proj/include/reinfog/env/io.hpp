#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "reinfog/core/dag.hpp"
#include "reinfog/env/cluster.hpp"
#include "reinfog/env/environment.hpp"

namespace reinfog::env {

/// {"nodes": [...], "links": [{"src", "dst", "latency_s", "bandwidth_mbps"}]};
/// endpoints are node indices or "user".
nlohmann::json to_json(const ClusterSpec& cluster);
ClusterSpec cluster_from_json(const nlohmann::json& j);

/// A list of application documents; ids default to list positions.
nlohmann::json workload_to_json(const std::vector<AppDag>& apps);
std::vector<AppDag> workload_from_json(const nlohmann::json& j);

ClusterSpec load_cluster(const std::filesystem::path& path);
std::vector<AppDag> load_workload(const std::filesystem::path& path);

/// app_id,task_id,node,start_s,finish_s,energy_j,success
std::string episode_csv(const EpisodeResult& result);

}  // namespace reinfog::env
