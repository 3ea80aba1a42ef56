#include "reinfog/experiments/config.hpp"

#include <algorithm>
#include <sstream>

#include "reinfog/core/io.hpp"

namespace reinfog::experiments {

namespace {

bool non_negative_integer(const nlohmann::json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

void flatten(const nlohmann::json& node, const std::string& prefix, ExperimentConfig& out) {
    for (const auto& [k, v] : node.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object())
            flatten(v, key, out);
        else
            out.set(key, v);
    }
}

[[noreturn]] void bad_value(const std::string& key, const std::string& expected) {
    throw ConfigError("config key " + key + " must be " + expected);
}

}  // namespace

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{
        "run.seed", "run.reps", "run.timing",
        "instance.path", "instance.components", "instance.nodes", "instance.omega1", "instance.omega2",
        "instance.learners", "instance.normalize",
        "placement.algorithms", "placement.population", "placement.generations", "placement.num_operations",
        "placement.crossover_rate", "placement.mutation_rate", "placement.fa_alpha", "placement.fa_beta",
        "placement.fa_gamma", "placement.pso_w", "placement.pso_c1", "placement.pso_c2", "placement.penalty_lambda",
        "env.cluster", "env.workload", "env.metric", "env.failure_penalty", "env.w1",
        "workload.apps", "workload.tasks", "workload.layers", "workload.edge_density", "workload.compute_min",
        "workload.compute_max", "workload.input_min", "workload.input_max", "workload.output_min",
        "workload.output_max", "workload.arrival_rate", "workload.seed",
        "dqn.lr", "dqn.gamma", "dqn.batch_size", "dqn.target_sync", "dqn.replay_capacity", "dqn.hidden",
        "dqn.activation", "dqn.optimizer", "dqn.eps_start", "dqn.eps_end", "dqn.eps_decay", "dqn.exploration",
        "train.episodes", "train.sync_interval", "train.batch_flush", "train.workers", "train.listen", "train.async",
        "train.max_updates",
        "simulate.policy", "simulate.baseline",
        "bench.populations", "bench.components", "bench.nodes", "bench.generations",
    };
    return keys;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    ExperimentConfig cfg;
    flatten(doc, "", cfg);
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
    try {
        return from_json(read_json_file(path));
    } catch (const FormatError& e) {
        throw ConfigError(e.what());
    }
}

void ExperimentConfig::set(const std::string& key, nlohmann::json value) {
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError("unknown config key: " + key);
    values_[key] = std::move(value);
}

void ExperimentConfig::set_from_text(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("override must look like key=value: " + assignment);
    const std::string key = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    auto parsed = nlohmann::json::parse(raw, nullptr, false);
    set(key, parsed.is_discarded() ? nlohmann::json(raw) : parsed);
}

const nlohmann::json* ExperimentConfig::find(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
    const auto* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_number()) bad_value(key, "a number");
    return v->get<double>();
}

std::size_t ExperimentConfig::count(const std::string& key, std::size_t fallback) const {
    const auto* v = find(key);
    if (v == nullptr) return fallback;
    if (!non_negative_integer(*v)) bad_value(key, "a non-negative integer");
    return v->get<std::size_t>();
}

std::uint64_t ExperimentConfig::u64(const std::string& key, std::uint64_t fallback) const {
    return optional_u64(key).value_or(fallback);
}

std::optional<std::uint64_t> ExperimentConfig::optional_u64(const std::string& key) const {
    const auto* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!non_negative_integer(*v)) bad_value(key, "a non-negative integer");
    return v->get<std::uint64_t>();
}

std::string ExperimentConfig::text(const std::string& key, const std::string& fallback) const {
    const auto* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_string()) bad_value(key, "a string");
    return v->get<std::string>();
}

bool ExperimentConfig::flag(const std::string& key, bool fallback) const {
    const auto* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) bad_value(key, "true or false");
    return v->get<bool>();
}

std::vector<std::string> ExperimentConfig::list(const std::string& key,
                                                const std::vector<std::string>& fallback) const {
    const auto* v = find(key);
    if (v == nullptr) return fallback;
    std::vector<std::string> out;
    if (v->is_array()) {
        for (const auto& item : *v) {
            if (item.is_string())
                out.push_back(item.get<std::string>());
            else if (item.is_number())
                out.push_back(item.dump());
            else
                bad_value(key, "a list of strings or numbers");
        }
        return out;
    }
    if (v->is_number()) return {v->dump()};
    if (!v->is_string()) bad_value(key, "a comma-separated list");
    std::stringstream ss(v->get<std::string>());
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace reinfog::experiments
