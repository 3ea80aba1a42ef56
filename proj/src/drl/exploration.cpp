#include "reinfog/drl/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reinfog::drl {

std::size_t argmax(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("argmax of an empty vector");
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best]) best = i;
    return best;
}

std::size_t eps_greedy(std::span<const double> q_values, double epsilon, Rng& rng) {
    if (q_values.empty()) throw std::invalid_argument("no actions to choose from");
    if (epsilon > 0.0 && std::uniform_real_distribution<double>(0.0, 1.0)(rng) < epsilon)
        return std::uniform_int_distribution<std::size_t>(0, q_values.size() - 1)(rng);
    return argmax(q_values);
}

double EpsilonSchedule::at(std::uint64_t step) const {
    if (decay_steps == 0 || step >= decay_steps) return end;
    const double frac = static_cast<double>(step) / static_cast<double>(decay_steps);
    return start + (end - start) * frac;
}

void OuNoiseState::validate() const {
    if (!(theta > 0.0)) throw std::invalid_argument("OU theta must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("OU dt must be > 0");
    if (!(sigma >= 0.0)) throw std::invalid_argument("OU sigma must be >= 0");
}

std::pair<OuNoiseState, std::vector<double>> ou_step(OuNoiseState state, Rng& rng) {
    state.validate();
    std::normal_distribution<double> normal(0.0, 1.0);
    const double diffusion = state.sigma * std::sqrt(state.dt);
    for (auto& x : state.x) {
        const double z = state.sigma > 0.0 ? normal(rng) : 0.0;
        x += state.theta * (state.mu - x) * state.dt + diffusion * z;
    }
    std::vector<double> sample = state.x;
    return {std::move(state), std::move(sample)};
}

std::string to_string(ExplorationKind kind) {
    return kind == ExplorationKind::epsilon_greedy ? "epsilon_greedy" : "ornstein_uhlenbeck";
}

ExplorationKind exploration_from_string(const std::string& text) {
    if (text == "epsilon_greedy" || text == "eps") return ExplorationKind::epsilon_greedy;
    if (text == "ornstein_uhlenbeck" || text == "ou") return ExplorationKind::ornstein_uhlenbeck;
    throw std::invalid_argument("unknown exploration strategy: " + text);
}

ExplorationEngine::ExplorationEngine(ExplorationKind kind, EpsilonSchedule schedule, OuNoiseState ou)
    : kind_(kind), schedule_(schedule), ou_(std::move(ou)) {
    if (kind_ == ExplorationKind::ornstein_uhlenbeck) ou_.validate();
}

std::size_t ExplorationEngine::select(std::span<const double> q_values, Rng& rng) {
    const double eps = current_epsilon();
    ++decisions_;
    if (kind_ == ExplorationKind::epsilon_greedy) return eps_greedy(q_values, eps, rng);

    if (ou_.x.size() != q_values.size()) ou_.x.assign(q_values.size(), ou_.mu);
    auto [next, noise] = ou_step(std::move(ou_), rng);
    ou_ = std::move(next);
    std::vector<double> perturbed(q_values.begin(), q_values.end());
    for (std::size_t a = 0; a < perturbed.size(); ++a) perturbed[a] += noise[a];
    return argmax(perturbed);
}

}  // namespace reinfog::drl
