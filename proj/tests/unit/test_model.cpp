#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "reinfog/core/io.hpp"
#include "reinfog/core/model.hpp"
#include "reinfog/placement/brute_force.hpp"
#include "reinfog/placement/instance_gen.hpp"
#include "reinfog/placement/operators.hpp"

using namespace reinfog;

namespace {

PlacementInstance tiny_instance() {
    std::vector<Component> comps{{0, 100, 64, 1.0, ComponentRole::learner}, {1, 50, 32, 1.0}};
    std::vector<Node> nodes{{0, 100, 128, 10}, {1, 200, 64, 40}};
    return PlacementInstance(comps, nodes, 0.5, 0.5);
}

// Every assignment of m genes over n nodes, in lexicographic order.
std::vector<Assignment> all_assignments(std::size_t m, std::size_t n) {
    std::vector<Assignment> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> genes(m);
        std::size_t c = code;
        for (std::size_t i = m; i-- > 0;) {
            genes[i] = c % n;
            c /= n;
        }
        out.emplace_back(genes);
    }
    return out;
}

}  // namespace

TEST_CASE("objective by hand") {
    auto inst = tiny_instance();
    // c0 on n0: O = 1, E = 10; c1 on n1: O = 0.25, E = 10.
    CHECK(objective(Assignment({0, 1}), inst) == doctest::Approx(0.5 * 1 + 0.5 * 10 + 0.5 * 0.25 + 0.5 * 10));
    CHECK(operation_time(inst.components()[0], inst.nodes()[1]) == 0.5);
    CHECK(operation_energy(inst.components()[0], inst.nodes()[1]) == 20.0);
}

TEST_CASE("constraint overflow magnitudes") {
    auto inst = tiny_instance();
    // Both on node 1: compute 150 <= 200, memory 96 > 64.
    auto rep = check_constraints(Assignment({1, 1}), inst);
    CHECK_FALSE(rep.feasible);
    CHECK(rep.memory_overflow[1] == 32.0);
    CHECK(rep.compute_overflow[1] == 0.0);
    CHECK(rep.total() == 32.0);
    // Both on node 0: compute 150 > 100, memory 96 <= 128, c1 takes 0.5 s.
    rep = check_constraints(Assignment({0, 0}), inst);
    CHECK(rep.compute_overflow[0] == 50.0);
    CHECK(rep.deadline_overflow[0] == 0.0);
    CHECK(rep.total() == 50.0);
    CHECK(check_constraints(Assignment({0, 1}), inst).feasible);
}

TEST_CASE("instance invariants are enforced") {
    std::vector<Node> nodes{{0, 100, 128, 10}};
    CHECK_THROWS_AS(Component(0, 0.0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Node(0, -1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(PlacementInstance({}, nodes, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(PlacementInstance({{0, 1, 1, 1}}, nodes, 0.7, 0.7), std::invalid_argument);
    CHECK_THROWS_AS(PlacementInstance({{0, 1, 1, 1}, {0, 1, 1, 1}}, nodes, 0.5, 0.5), std::invalid_argument);
    auto inst = tiny_instance();
    CHECK_THROWS_AS(objective(Assignment({0}), inst), std::invalid_argument);
    CHECK_THROWS_AS(objective(Assignment({0, 2}), inst), std::invalid_argument);
}

TEST_CASE("normalized terms divide by instance maxima") {
    std::vector<Component> comps{{0, 100, 64, 10}, {1, 50, 32, 10}};
    std::vector<Node> nodes{{0, 100, 128, 10}, {1, 200, 64, 40}};
    PlacementInstance inst(comps, nodes, 0.5, 0.5, true);
    CHECK(inst.time_scale() == 1.0);     // c0 on n0
    CHECK(inst.energy_scale() == 20.0);  // c0 on n1
    CHECK(objective(Assignment({0, 0}), inst) == doctest::Approx(0.5 * (1.0 + 0.5) + 0.5 * (10.0 + 5.0) / 20.0));
}

TEST_CASE("brute force matches an independent enumeration") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        placement::InstanceSpec spec;
        spec.components = 1 + seed % 5;
        spec.nodes = 1 + seed % 4;
        auto inst = placement::generate_instance(spec, seed);
        double best = std::numeric_limits<double>::infinity();
        Assignment arg;
        for (const auto& a : all_assignments(spec.components, spec.nodes)) {
            if (!check_constraints(a, inst).feasible) continue;
            double f = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto& c = inst.components()[i];
                const auto& nd = inst.nodes()[a[i]];
                f += 0.5 * c.compute_req / nd.compute_cap + 0.5 * nd.power_draw * c.compute_req / nd.compute_cap;
            }
            if (f < best) {
                best = f;
                arg = a;
            }
        }
        auto opt = placement::brute_force_optimal(inst);
        CHECK(opt.objective == doctest::Approx(best).epsilon(1e-12));
        CHECK(opt.assignment == arg);
        CHECK(opt.evaluated == all_assignments(spec.components, spec.nodes).size());
    }
}

TEST_CASE("generated instances contain a feasible assignment") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto inst = placement::generate_instance({5, 4}, seed);
        CHECK_NOTHROW(placement::brute_force_optimal(inst));
        CHECK(inst.components()[0].role == ComponentRole::learner);
        CHECK(inst.components()[1].role == ComponentRole::worker);
    }
}

TEST_CASE("penalty makes the fittest assignment the feasible optimum") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        auto inst = placement::generate_instance({4, 3}, seed);
        auto opt = placement::brute_force_optimal(inst);
        double best_fit = -std::numeric_limits<double>::infinity();
        for (const auto& a : all_assignments(4, 3)) {
            const double f = placement::fitness(a, inst, placement::kDefaultPenaltyLambda);
            if (f > best_fit) best_fit = f;
        }
        CHECK(best_fit == doctest::Approx(-opt.objective).epsilon(1e-12));
    }
}

TEST_CASE("oracle refuses oversized search spaces") {
    auto inst = placement::generate_instance({30, 10}, 1);
    CHECK(placement::search_space_size(inst) == 1e30);
    CHECK_THROWS_AS(placement::brute_force_optimal(inst), placement::SearchSpaceTooLarge);
}

TEST_CASE("infeasible instance is reported") {
    PlacementInstance inst({{0, 100, 500, 1}}, {{0, 100, 100, 1}}, 0.5, 0.5);
    CHECK_THROWS_AS(placement::brute_force_optimal(inst), placement::InfeasibleInstance);
}

TEST_CASE("instance json round trip") {
    auto inst = placement::generate_instance({5, 4}, 7);
    auto back = instance_from_json(to_json(inst));
    REQUIRE(back.component_count() == inst.component_count());
    for (std::size_t i = 0; i < inst.component_count(); ++i) {
        CHECK(back.components()[i].compute_req == inst.components()[i].compute_req);
        CHECK(back.components()[i].deadline == inst.components()[i].deadline);
        CHECK(back.components()[i].role == inst.components()[i].role);
    }
    for (std::size_t j = 0; j < inst.node_count(); ++j) CHECK(back.nodes()[j].power_draw == inst.nodes()[j].power_draw);
    CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"components": 3})")), FormatError);
}

TEST_CASE("format_number round trips") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = d(rng);
        CHECK(std::stod(format_number(v)) == v);
    }
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(3.0) == "3");
}
