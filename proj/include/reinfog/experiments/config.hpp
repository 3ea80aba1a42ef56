#pragma once

// Experiment configuration: flat "module.param" keys read from a JSON file,
// then overridden from the command line.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace reinfog::experiments {

/// Usage and configuration problems (exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every key the commands understand.
const std::vector<std::string>& known_keys();

class ExperimentConfig {
public:
    ExperimentConfig() = default;

    /// Nested objects are flattened with '.', so {"dqn": {"lr": 0.1}} and
    /// {"dqn.lr": 0.1} are equivalent.
    static ExperimentConfig from_json(const nlohmann::json& doc);
    static ExperimentConfig from_file(const std::filesystem::path& path);

    /// Throws ConfigError for unknown keys.
    void set(const std::string& key, nlohmann::json value);
    /// "key=value"; the value is parsed as JSON when possible, else kept as text.
    void set_from_text(const std::string& assignment);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    double number(const std::string& key, double fallback) const;
    std::size_t count(const std::string& key, std::size_t fallback) const;
    std::uint64_t u64(const std::string& key, std::uint64_t fallback) const;
    std::optional<std::uint64_t> optional_u64(const std::string& key) const;
    std::string text(const std::string& key, const std::string& fallback) const;
    bool flag(const std::string& key, bool fallback) const;
    /// Comma-separated text or a JSON array of strings.
    std::vector<std::string> list(const std::string& key, const std::vector<std::string>& fallback) const;

    const std::map<std::string, nlohmann::json>& values() const noexcept { return values_; }

private:
    const nlohmann::json* find(const std::string& key) const;

    std::map<std::string, nlohmann::json> values_;
};

}  // namespace reinfog::experiments
