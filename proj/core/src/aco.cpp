#include "cipp/aco.hpp"

#include <cmath>
#include <limits>

#include "cipp/errors.hpp"

namespace cipp {

namespace {

// tau^a * eta^b for the whole matrix, refreshed once per iteration since
// tau only changes between iterations.
void fill_weights(const PheromoneState& state, double a, double b, std::vector<double>& omega) {
    const std::size_t count = state.tau.size();
    omega.resize(count);
    if (a == 1.0 && b == 1.0) {
        for (std::size_t i = 0; i < count; ++i) omega[i] = state.tau[i] * state.eta[i];
        return;
    }
    for (std::size_t i = 0; i < count; ++i)
        omega[i] = std::pow(state.tau[i], a) * std::pow(state.eta[i], b);
}

void check_normalized(const double* row, const std::vector<char>& visited, int m, double total) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        if (!visited[j]) sum += row[j] / total;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw PipelineError("transition probabilities failed to normalize");
}

void construct_from_weights(const std::vector<double>& omega, int m, SplitMix64& rng,
                            std::vector<int>& order, std::vector<char>& visited) {
    order.clear();
    order.reserve(m);
    visited.assign(m, 0);

    int current = static_cast<int>(rng.next_index(m));
    order.push_back(current);
    visited[current] = 1;

    for (int step = 1; step < m; ++step) {
        const double* row = omega.data() + static_cast<std::size_t>(current) * m;
        double total = 0.0;
        for (int j = 0; j < m; ++j) {
            if (!visited[j]) total += row[j];
        }

        int next = -1;
        if (total > 0.0) {
            check_normalized(row, visited, m, total);
            const double r = rng.next_double() * total;
            double acc = 0.0;
            for (int j = 0; j < m; ++j) {
                if (visited[j]) continue;
                acc += row[j];
                if (r < acc) {
                    next = j;
                    break;
                }
            }
        } else {
            // every weight underflowed; fall back to a uniform pick
            const int remaining = m - step;
            int target = static_cast<int>(rng.next_double() * remaining);
            if (target >= remaining) target = remaining - 1;
            for (int j = 0; j < m; ++j) {
                if (!visited[j] && target-- == 0) {
                    next = j;
                    break;
                }
            }
        }
        if (next < 0) {
            // rounding pushed r past the last bucket; take the last candidate
            for (int j = m - 1; j >= 0; --j) {
                if (!visited[j]) {
                    next = j;
                    break;
                }
            }
        }
        order.push_back(next);
        visited[next] = 1;
        current = next;
    }
}

} // namespace

void validate_params(const AcoParams& params) {
    if (params.n_ants < 1) throw ValidationError("ant count must be at least 1");
    if (!(params.pheromone_influence >= 0.0))
        throw ValidationError("pheromone influence must be nonnegative");
    if (!(params.heuristic_influence >= 0.0))
        throw ValidationError("heuristic influence must be nonnegative");
    if (!(params.deposit_q > 0.0)) throw ValidationError("deposit constant must be positive");
    if (!(params.evaporation > 0.0) || !(params.evaporation < 1.0))
        throw ValidationError("evaporation rate must lie in (0, 1)");
    if (params.max_iterations < 1) throw ValidationError("iteration count must be at least 1");
    if (!(params.initial_pheromone > 0.0))
        throw ValidationError("initial pheromone must be positive");
}

PheromoneState::PheromoneState(const CostMatrix& cm, double tau0) : size(cm.size()) {
    if (!(tau0 > 0.0)) throw ValidationError("initial pheromone must be positive");
    const std::size_t count = static_cast<std::size_t>(size) * size;
    tau.assign(count, tau0);
    eta.assign(count, 0.0);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            if (i == j) continue;
            const double c = cm(i, j);
            eta[static_cast<std::size_t>(i) * size + j] =
                c > 0.0 ? std::min(1.0 / c, kEtaCap) : kEtaCap;
        }
    }
}

std::vector<double> transition_probabilities(const PheromoneState& state, int current,
                                             const std::vector<int>& unvisited, double a,
                                             double b) {
    if (unvisited.empty())
        throw ValidationError("transition probabilities need unvisited candidates");
    for (int j : unvisited) {
        if (j < 0 || j >= state.size || j == current)
            throw ValidationError("unvisited set contains an invalid node");
    }

    std::vector<double> probs(unvisited.size());
    double total = 0.0;
    for (std::size_t k = 0; k < unvisited.size(); ++k) {
        probs[k] = std::pow(state.tau_at(current, unvisited[k]), a) *
                   std::pow(state.eta_at(current, unvisited[k]), b);
        total += probs[k];
    }
    if (total <= 0.0) {
        const double uniform = 1.0 / static_cast<double>(probs.size());
        for (auto& p : probs) p = uniform;
        return probs;
    }

    double sum = 0.0;
    for (auto& p : probs) {
        p /= total;
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw PipelineError("transition probabilities failed to normalize");
    return probs;
}

std::vector<int> construct_tour(const PheromoneState& state, const AcoParams& params,
                                SplitMix64& rng) {
    if (state.size < 2) throw ValidationError("tour construction needs at least two nodes");
    std::vector<double> omega;
    fill_weights(state, params.pheromone_influence, params.heuristic_influence, omega);
    std::vector<int> order;
    std::vector<char> visited;
    construct_from_weights(omega, state.size, rng, order, visited);
    return order;
}

void deposit_and_evaporate(PheromoneState& state,
                           const std::vector<std::pair<std::vector<int>, double>>& tours,
                           const CostMatrix& cm, const AcoParams& params) {
    const int m = state.size;
    const double keep = 1.0 - params.evaporation;
    for (auto& t : state.tau) t *= keep;

    auto deposit = [&](int i, int j, double amount) {
        state.tau[static_cast<std::size_t>(i) * m + j] += amount;
        state.tau[static_cast<std::size_t>(j) * m + i] += amount;
    };

    for (const auto& [order, fitness] : tours) {
        if (order.size() < 2) continue;
        const std::size_t edges = params.closed_tour ? order.size() : order.size() - 1;
        for (std::size_t e = 0; e < edges; ++e) {
            const int i = order[e];
            const int j = order[(e + 1) % order.size()];
            const double basis = params.deposit_rule == DepositRule::EdgeInverseCost
                                     ? cm(i, j)
                                     : fitness;
            deposit(i, j, params.deposit_q / std::max(basis, kCostFloor));
        }
    }

    for (auto& t : state.tau) t = std::max(t, kTauFloor);
}

AcoResult solve(const CostMatrix& cm, const AcoParams& params, const IterationObserver& observer) {
    validate_params(params);
    const int m = cm.size();
    if (m < 2) throw ValidationError("aco needs at least two viewpoints");

    PheromoneState state(cm, params.initial_pheromone);
    std::vector<double> omega;

    AcoResult result;
    result.best_fitness = std::numeric_limits<double>::infinity();
    result.history.reserve(params.max_iterations);

    std::vector<std::pair<std::vector<int>, double>> tours;
    tours.reserve(params.n_ants);
    std::vector<int> order;
    std::vector<char> visited;

    for (int iter = 0; iter < params.max_iterations; ++iter) {
        fill_weights(state, params.pheromone_influence, params.heuristic_influence, omega);
        tours.clear();
        for (int ant = 0; ant < params.n_ants; ++ant) {
            SplitMix64 rng = SplitMix64::stream(params.seed, static_cast<std::uint64_t>(iter),
                                                static_cast<std::uint64_t>(ant));
            construct_from_weights(omega, m, rng, order, visited);
            const double fitness = path_fitness(order, cm, params.closed_tour);
            if (fitness < result.best_fitness) {
                result.best_fitness = fitness;
                result.best_order = order;
            }
            tours.emplace_back(order, fitness);
        }
        deposit_and_evaporate(state, tours, cm, params);
        result.history.push_back(result.best_fitness);
        ++result.iterations_run;
        if (observer) observer(iter + 1, state, result.best_fitness);
    }
    return result;
}

} // namespace cipp
