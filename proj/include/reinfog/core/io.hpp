#pragma once

// JSON documents for placement instances and application DAGs.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "reinfog/core/dag.hpp"
#include "reinfog/core/model.hpp"

namespace reinfog {

/// Raised for unreadable files or documents that do not match the schema.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Component& c);
nlohmann::json to_json(const Node& nd);
nlohmann::json to_json(const PlacementInstance& inst);
nlohmann::json to_json(const Task& t);
nlohmann::json to_json(const AppDag& dag);

Component component_from_json(const nlohmann::json& j);
Node node_from_json(const nlohmann::json& j);
PlacementInstance instance_from_json(const nlohmann::json& j);
Task task_from_json(const nlohmann::json& j);
/// Accepts documents without "id" (defaults to `default_id`).
AppDag dag_from_json(const nlohmann::json& j, int default_id = 0);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

PlacementInstance load_instance(const std::filesystem::path& path);
AppDag load_dag(const std::filesystem::path& path);

}  // namespace reinfog
