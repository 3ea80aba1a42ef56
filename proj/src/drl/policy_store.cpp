#include "reinfog/drl/policy_store.hpp"

#include <fstream>

namespace reinfog::drl {

using nlohmann::json;

json network_to_json(const NetworkParams& net) {
    return {{"layer_sizes", net.layer_sizes},
            {"activation", to_string(net.activation)},
            {"weights", net.weights},
            {"biases", net.biases}};
}

NetworkParams network_from_json(const json& j) {
    try {
        NetworkParams net;
        net.layer_sizes = j.at("layer_sizes").get<std::vector<std::size_t>>();
        net.activation = activation_from_string(j.at("activation").get<std::string>());
        net.weights = j.at("weights").get<std::vector<std::vector<double>>>();
        net.biases = j.at("biases").get<std::vector<std::vector<double>>>();
        net.validate();
        return net;
    } catch (const json::exception& e) {
        throw PolicyFormatError(std::string("malformed policy: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw PolicyFormatError(std::string("invalid policy: ") + e.what());
    }
}

void save_policy(const NetworkParams& net, const std::filesystem::path& path, const json& metadata) {
    net.validate();
    json doc = network_to_json(net);
    doc["version"] = kPolicyFormatVersion;
    doc["metadata"] = metadata;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write policy file " + path.string());
    out << doc.dump(1) << '\n';
    if (!out) throw std::runtime_error("failed writing policy file " + path.string());
}

StoredPolicy load_policy(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PolicyFormatError("cannot open policy file " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw PolicyFormatError("corrupted policy file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("version"))
        throw PolicyFormatError("policy file " + path.string() + " has no version field");
    if (!doc["version"].is_string() || doc["version"].get<std::string>() != kPolicyFormatVersion)
        throw PolicyFormatError("unsupported policy version " + doc["version"].dump() + ", expected \"1\"");
    StoredPolicy out;
    out.network = network_from_json(doc);
    if (doc.contains("metadata")) out.metadata = doc["metadata"];
    return out;
}

}  // namespace reinfog::drl
