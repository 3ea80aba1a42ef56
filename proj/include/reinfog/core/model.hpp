#pragma once

// Placement problem: DRL components (learners and workers) assigned to
// heterogeneous nodes under compute, memory and deadline constraints.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace reinfog {

enum class ComponentRole { learner, worker };

std::string to_string(ComponentRole role);
ComponentRole component_role_from_string(const std::string& text);

/// A DRL component to be placed. Requirements must be strictly positive.
struct Component {
    int id = 0;
    double compute_req = 0.0;  ///< mega-cycles
    double mem_req = 0.0;      ///< megabytes
    double deadline = 0.0;     ///< seconds
    ComponentRole role = ComponentRole::worker;

    Component(int id, double compute_req, double mem_req, double deadline,
              ComponentRole role = ComponentRole::worker);
};

/// A computing node. `power_draw` is the constant wattage while busy.
struct Node {
    int id = 0;
    double compute_cap = 0.0;  ///< mega-cycles per second
    double mem_avail = 0.0;    ///< megabytes
    double power_draw = 0.0;   ///< watts

    Node(int id, double compute_cap, double mem_avail, double power_draw);
};

/// Gene i holds the node index (not id) hosting component i.
struct Assignment {
    std::vector<std::size_t> node_of;

    Assignment() = default;
    explicit Assignment(std::vector<std::size_t> genes) : node_of(std::move(genes)) {}

    std::size_t size() const noexcept { return node_of.size(); }
    std::size_t& operator[](std::size_t i) { return node_of[i]; }
    std::size_t operator[](std::size_t i) const { return node_of[i]; }

    auto operator<=>(const Assignment&) const = default;
    bool operator==(const Assignment&) const = default;
};

class PlacementInstance {
public:
    /// Throws std::invalid_argument when any invariant is violated (empty
    /// sets, duplicate ids, negative weights, weights not summing to one).
    /// With `normalize_terms`, operation time and energy are divided by their
    /// instance-wide maxima before weighting.
    PlacementInstance(std::vector<Component> components, std::vector<Node> nodes,
                      double omega1, double omega2, bool normalize_terms = false);

    const std::vector<Component>& components() const noexcept { return components_; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }
    double omega1() const noexcept { return omega1_; }
    double omega2() const noexcept { return omega2_; }
    bool normalize_terms() const noexcept { return normalize_terms_; }

    /// Divisors applied to O and E inside the objective (1 unless normalized).
    double time_scale() const noexcept { return time_scale_; }
    double energy_scale() const noexcept { return energy_scale_; }

    /// Cost of placing component i on node j: w1*O + w2*E (after scaling).
    double placement_cost(std::size_t component, std::size_t node) const;

private:
    std::vector<Component> components_;
    std::vector<Node> nodes_;
    double omega1_;
    double omega2_;
    bool normalize_terms_;
    double time_scale_ = 1.0;
    double energy_scale_ = 1.0;
};

/// O(C, N) = U / P in seconds.
double operation_time(const Component& c, const Node& nd);

/// E(C, N) = power_draw * O(C, N) in joules.
double operation_energy(const Component& c, const Node& nd);

/// Throws std::invalid_argument if the assignment does not fit the instance.
void validate_assignment(const Assignment& a, const PlacementInstance& inst);

/// F = sum_i (w1 * O(C_i, N_a(i)) + w2 * E(C_i, N_a(i))).
double objective(const Assignment& a, const PlacementInstance& inst);

struct ViolationReport {
    std::vector<double> compute_overflow;   ///< per node, max(0, sum U - P)
    std::vector<double> memory_overflow;    ///< per node, max(0, sum M - A)
    std::vector<double> deadline_overflow;  ///< per component, max(0, O - D)
    bool feasible = true;

    /// Sum of every overflow magnitude.
    double total() const;
};

ViolationReport check_constraints(const Assignment& a, const PlacementInstance& inst);

}  // namespace reinfog
