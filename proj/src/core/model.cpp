#include "reinfog/core/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace reinfog {

namespace {

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string to_string(ComponentRole role) {
    return role == ComponentRole::learner ? "learner" : "worker";
}

ComponentRole component_role_from_string(const std::string& text) {
    if (text == "learner") return ComponentRole::learner;
    if (text == "worker") return ComponentRole::worker;
    throw std::invalid_argument("unknown component role: " + text);
}

Component::Component(int id_, double compute_req_, double mem_req_, double deadline_,
                     ComponentRole role_)
    : id(id_), compute_req(compute_req_), mem_req(mem_req_), deadline(deadline_), role(role_) {
    if (!finite_positive(compute_req)) throw std::invalid_argument("component compute_req must be > 0");
    if (!finite_positive(mem_req)) throw std::invalid_argument("component mem_req must be > 0");
    if (!finite_positive(deadline)) throw std::invalid_argument("component deadline must be > 0");
}

Node::Node(int id_, double compute_cap_, double mem_avail_, double power_draw_)
    : id(id_), compute_cap(compute_cap_), mem_avail(mem_avail_), power_draw(power_draw_) {
    if (!finite_positive(compute_cap)) throw std::invalid_argument("node compute_cap must be > 0");
    if (!std::isfinite(mem_avail) || mem_avail < 0.0)
        throw std::invalid_argument("node mem_avail must be >= 0");
    if (!std::isfinite(power_draw) || power_draw < 0.0)
        throw std::invalid_argument("node power_draw must be >= 0");
}

PlacementInstance::PlacementInstance(std::vector<Component> components, std::vector<Node> nodes,
                                     double omega1, double omega2, bool normalize_terms)
    : components_(std::move(components)),
      nodes_(std::move(nodes)),
      omega1_(omega1),
      omega2_(omega2),
      normalize_terms_(normalize_terms) {
    if (components_.empty()) throw std::invalid_argument("instance needs at least one component");
    if (nodes_.empty()) throw std::invalid_argument("instance needs at least one node");
    if (!(omega1_ >= 0.0) || !(omega2_ >= 0.0))
        throw std::invalid_argument("objective weights must be non-negative");
    if (std::abs(omega1_ + omega2_ - 1.0) > 1e-9)
        throw std::invalid_argument("objective weights must sum to 1");

    std::unordered_set<int> seen;
    for (const auto& c : components_)
        if (!seen.insert(c.id).second)
            throw std::invalid_argument("duplicate component id " + std::to_string(c.id));
    seen.clear();
    for (const auto& nd : nodes_)
        if (!seen.insert(nd.id).second)
            throw std::invalid_argument("duplicate node id " + std::to_string(nd.id));

    if (normalize_terms_) {
        double max_time = 0.0;
        double max_energy = 0.0;
        for (const auto& c : components_) {
            for (const auto& nd : nodes_) {
                max_time = std::max(max_time, operation_time(c, nd));
                max_energy = std::max(max_energy, operation_energy(c, nd));
            }
        }
        time_scale_ = max_time > 0.0 ? max_time : 1.0;
        energy_scale_ = max_energy > 0.0 ? max_energy : 1.0;
    }
}

double PlacementInstance::placement_cost(std::size_t component, std::size_t node) const {
    const auto& c = components_[component];
    const auto& nd = nodes_[node];
    return omega1_ * (operation_time(c, nd) / time_scale_) +
           omega2_ * (operation_energy(c, nd) / energy_scale_);
}

double operation_time(const Component& c, const Node& nd) { return c.compute_req / nd.compute_cap; }

double operation_energy(const Component& c, const Node& nd) {
    return nd.power_draw * operation_time(c, nd);
}

void validate_assignment(const Assignment& a, const PlacementInstance& inst) {
    if (a.size() != inst.component_count())
        throw std::invalid_argument("assignment length " + std::to_string(a.size()) +
                                    " does not match component count " +
                                    std::to_string(inst.component_count()));
    for (std::size_t gene : a.node_of)
        if (gene >= inst.node_count())
            throw std::invalid_argument("assignment references node index " +
                                        std::to_string(gene) + " out of range");
}

double objective(const Assignment& a, const PlacementInstance& inst) {
    validate_assignment(a, inst);
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += inst.placement_cost(i, a[i]);
    return total;
}

double ViolationReport::total() const {
    double sum = 0.0;
    for (double v : compute_overflow) sum += v;
    for (double v : memory_overflow) sum += v;
    for (double v : deadline_overflow) sum += v;
    return sum;
}

ViolationReport check_constraints(const Assignment& a, const PlacementInstance& inst) {
    validate_assignment(a, inst);
    const auto& comps = inst.components();
    const auto& nodes = inst.nodes();

    std::vector<double> compute_load(nodes.size(), 0.0);
    std::vector<double> memory_load(nodes.size(), 0.0);
    ViolationReport report;
    report.deadline_overflow.resize(comps.size(), 0.0);

    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::size_t j = a[i];
        compute_load[j] += comps[i].compute_req;
        memory_load[j] += comps[i].mem_req;
        report.deadline_overflow[i] =
            std::max(0.0, operation_time(comps[i], nodes[j]) - comps[i].deadline);
    }

    report.compute_overflow.resize(nodes.size());
    report.memory_overflow.resize(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        report.compute_overflow[j] = std::max(0.0, compute_load[j] - nodes[j].compute_cap);
        report.memory_overflow[j] = std::max(0.0, memory_load[j] - nodes[j].mem_avail);
    }

    auto positive = [](double v) { return v > 0.0; };
    report.feasible = std::none_of(report.compute_overflow.begin(), report.compute_overflow.end(), positive) &&
                      std::none_of(report.memory_overflow.begin(), report.memory_overflow.end(), positive) &&
                      std::none_of(report.deadline_overflow.begin(), report.deadline_overflow.end(), positive);
    return report;
}

}  // namespace reinfog
