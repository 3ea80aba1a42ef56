#include "reinfog/core/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace reinfog {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

// Domain constructors throw std::invalid_argument; surface those as format errors.
template <typename F>
auto checked(F&& build) {
    try {
        return build();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

json to_json(const Component& c) {
    return {{"id", c.id},           {"compute_req", c.compute_req}, {"mem_req", c.mem_req},
            {"deadline", c.deadline}, {"role", to_string(c.role)}};
}

json to_json(const Node& nd) {
    return {{"id", nd.id},
            {"compute_cap", nd.compute_cap},
            {"mem_avail", nd.mem_avail},
            {"power_draw", nd.power_draw}};
}

json to_json(const PlacementInstance& inst) {
    json comps = json::array();
    for (const auto& c : inst.components()) comps.push_back(to_json(c));
    json nodes = json::array();
    for (const auto& nd : inst.nodes()) nodes.push_back(to_json(nd));
    json doc = {{"components", comps},
                {"nodes", nodes},
                {"weights", {{"omega1", inst.omega1()}, {"omega2", inst.omega2()}}}};
    if (inst.normalize_terms()) doc["normalize"] = true;
    return doc;
}

json to_json(const Task& t) {
    json j = {{"id", t.id},
              {"compute_req", t.compute_req},
              {"input_size", t.input_size},
              {"output_size", t.output_size},
              {"predecessors", t.predecessors}};
    if (t.deadline) j["deadline"] = *t.deadline;
    return j;
}

json to_json(const AppDag& dag) {
    json tasks = json::array();
    for (const auto& t : dag.tasks()) tasks.push_back(to_json(t));
    json j = {{"id", dag.id()}, {"tasks", tasks}};
    if (dag.release() != 0.0) j["release_s"] = dag.release();
    return j;
}

Component component_from_json(const json& j) {
    auto role = j.contains("role") ? component_role_from_string(field<std::string>(j, "role"))
                                   : ComponentRole::worker;
    return checked([&] {
        return Component(field<int>(j, "id"), field<double>(j, "compute_req"), field<double>(j, "mem_req"),
                         field<double>(j, "deadline"), role);
    });
}

Node node_from_json(const json& j) {
    return checked([&] {
        return Node(field<int>(j, "id"), field<double>(j, "compute_cap"), field<double>(j, "mem_avail"),
                    field<double>(j, "power_draw"));
    });
}

PlacementInstance instance_from_json(const json& j) {
    std::vector<Component> comps;
    for (const auto& c : field<json>(j, "components")) comps.push_back(component_from_json(c));
    std::vector<Node> nodes;
    for (const auto& nd : field<json>(j, "nodes")) nodes.push_back(node_from_json(nd));
    const json weights = field<json>(j, "weights");
    const bool normalize = j.contains("normalize") ? field<bool>(j, "normalize") : false;
    return checked([&] {
        return PlacementInstance(std::move(comps), std::move(nodes), field<double>(weights, "omega1"),
                                 field<double>(weights, "omega2"), normalize);
    });
}

Task task_from_json(const json& j) {
    Task t;
    t.id = field<int>(j, "id");
    t.compute_req = field<double>(j, "compute_req");
    t.input_size = field<double>(j, "input_size");
    t.output_size = field<double>(j, "output_size");
    t.predecessors = j.contains("predecessors") ? field<std::vector<int>>(j, "predecessors") : std::vector<int>{};
    if (j.contains("deadline")) t.deadline = field<double>(j, "deadline");
    return t;
}

AppDag dag_from_json(const json& j, int default_id) {
    std::vector<Task> tasks;
    for (const auto& t : field<json>(j, "tasks")) tasks.push_back(task_from_json(t));
    const int id = j.contains("id") ? field<int>(j, "id") : default_id;
    const double release = j.contains("release_s") ? field<double>(j, "release_s") : 0.0;
    return checked([&] { return AppDag(id, std::move(tasks), release); });
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string format_number(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

PlacementInstance load_instance(const std::filesystem::path& path) {
    return instance_from_json(read_json_file(path));
}

AppDag load_dag(const std::filesystem::path& path) { return dag_from_json(read_json_file(path)); }

}  // namespace reinfog
