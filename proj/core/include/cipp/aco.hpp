#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cipp/path_cost.hpp"
#include "cipp/rng.hpp"

namespace cipp {

// Numeric guards: pheromone never fully evaporates, and zero-cost edges
// get a large finite desirability instead of 1/0.
inline constexpr double kTauFloor = 1e-12;
inline constexpr double kEtaCap = 1e12;
inline constexpr double kCostFloor = 1e-9;

// How much pheromone an ant leaves on each edge it walked: proportional to
// the inverse of that edge's cost, or to the inverse of the whole tour's
// fitness.
enum class DepositRule { EdgeInverseCost, TourInverseFitness };

struct AcoParams {
    int n_ants = 100;
    double pheromone_influence = 1.0;  // exponent on tau
    double heuristic_influence = 1.0;  // exponent on eta
    double deposit_q = 1.0;
    double evaporation = 0.05;
    int max_iterations = 500;
    std::uint64_t seed = 0;
    double initial_pheromone = 1.0;
    DepositRule deposit_rule = DepositRule::EdgeInverseCost;
    bool closed_tour = false;
};

void validate_params(const AcoParams& params);

struct PheromoneState {
    int size = 0;
    std::vector<double> tau;  // row-major, mutable across iterations
    std::vector<double> eta;  // 1/cost, fixed at construction

    PheromoneState() = default;
    PheromoneState(const CostMatrix& cm, double tau0);

    double tau_at(int i, int j) const { return tau[static_cast<std::size_t>(i) * size + j]; }
    double eta_at(int i, int j) const { return eta[static_cast<std::size_t>(i) * size + j]; }
};

struct AcoResult {
    std::vector<int> best_order;
    double best_fitness = 0.0;
    std::vector<double> history;  // best-so-far after each iteration
    int iterations_run = 0;
};

// Normalized move distribution from `current` over the unvisited nodes.
// Falls back to uniform when every weight underflows to zero.
std::vector<double> transition_probabilities(const PheromoneState& state, int current,
                                             const std::vector<int>& unvisited, double a,
                                             double b);

// One ant's walk: uniform random start, then roulette sampling until all
// nodes are visited. Consumes exactly one draw per step.
std::vector<int> construct_tour(const PheromoneState& state, const AcoParams& params,
                                SplitMix64& rng);

void deposit_and_evaporate(PheromoneState& state,
                           const std::vector<std::pair<std::vector<int>, double>>& tours,
                           const CostMatrix& cm, const AcoParams& params);

using IterationObserver =
    std::function<void(int iteration, const PheromoneState& state, double best_fitness)>;

AcoResult solve(const CostMatrix& cm, const AcoParams& params,
                const IterationObserver& observer = {});

} // namespace cipp
