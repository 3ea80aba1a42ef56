#include "reinfog/env/io.hpp"

#include <sstream>

#include "reinfog/core/io.hpp"

namespace reinfog::env {

namespace {

nlohmann::json endpoint_to_json(Endpoint e) {
    return e == kUser ? nlohmann::json("user") : nlohmann::json(e);
}

Endpoint endpoint_from_json(const nlohmann::json& j) {
    if (j.is_string() && j.get<std::string>() == "user") return kUser;
    if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<Endpoint>();
    throw FormatError("link endpoint must be a node index or \"user\"");
}

}  // namespace

nlohmann::json to_json(const ClusterSpec& cluster) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& nd : cluster.nodes()) nodes.push_back(reinfog::to_json(nd));
    nlohmann::json links = nlohmann::json::array();
    for (const auto& e : cluster.links())
        links.push_back({{"src", endpoint_to_json(e.src)},
                         {"dst", endpoint_to_json(e.dst)},
                         {"latency_s", e.link.latency_s},
                         {"bandwidth_mbps", e.link.bandwidth_mbps}});
    return {{"nodes", nodes}, {"links", links}};
}

ClusterSpec cluster_from_json(const nlohmann::json& j) {
    try {
        std::vector<Node> nodes;
        for (const auto& n : j.at("nodes")) nodes.push_back(node_from_json(n));
        std::vector<LinkEntry> links;
        for (const auto& l : j.at("links"))
            links.push_back({endpoint_from_json(l.at("src")), endpoint_from_json(l.at("dst")),
                             Link{l.at("latency_s").get<double>(), l.at("bandwidth_mbps").get<double>()}});
        return ClusterSpec(std::move(nodes), links);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed cluster document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid cluster: ") + e.what());
    }
}

nlohmann::json workload_to_json(const std::vector<AppDag>& apps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& dag : apps) out.push_back(reinfog::to_json(dag));
    return out;
}

std::vector<AppDag> workload_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw FormatError("workload document must be a list of applications");
    std::vector<AppDag> apps;
    for (std::size_t i = 0; i < j.size(); ++i) apps.push_back(dag_from_json(j[i], static_cast<int>(i)));
    return apps;
}

ClusterSpec load_cluster(const std::filesystem::path& path) { return cluster_from_json(read_json_file(path)); }

std::vector<AppDag> load_workload(const std::filesystem::path& path) {
    return workload_from_json(read_json_file(path));
}

std::string episode_csv(const EpisodeResult& result) {
    std::ostringstream out;
    out << "app_id,task_id,node,start_s,finish_s,energy_j,success\n";
    for (std::size_t a = 0; a < result.schedules.size(); ++a)
        for (const auto& rec : result.schedules[a].records)
            out << result.app_ids[a] << ',' << rec.task_id << ',' << rec.node << ',' << format_number(rec.start) << ','
                << format_number(rec.finish) << ',' << format_number(rec.energy) << ',' << (rec.success ? 1 : 0)
                << '\n';
    return out.str();
}

}  // namespace reinfog::env
