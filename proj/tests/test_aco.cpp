#include <doctest.h>

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <vector>

#include "cipp/aco.hpp"
#include "cipp/errors.hpp"
#include "cipp/path_cost.hpp"
#include "cipp/rng.hpp"

namespace {

cipp::CostMatrix line_matrix() {
    const std::vector<Eigen::Vector3d> pts{
        {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}};
    return cipp::build_cost_matrix(pts, {1.0, 2.0});
}

cipp::CostMatrix random_matrix(int m, std::uint64_t seed) {
    auto rng = cipp::SplitMix64::stream(seed, 0, 0);
    std::vector<Eigen::Vector3d> pts;
    for (int i = 0; i < m; ++i)
        pts.emplace_back(100.0 * rng.next_double(), 100.0 * rng.next_double(),
                         100.0 * rng.next_double());
    return cipp::build_cost_matrix(pts, {1.0, 2.0});
}

bool is_permutation_of_n(const std::vector<int>& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

} // namespace

TEST_SUITE("aco") {

TEST_CASE("transition probabilities form a distribution") {
    const auto cm = random_matrix(6, 11);
    const cipp::PheromoneState ps(cm, 1.0);
    const std::vector<int> unvisited{1, 2, 4, 5};
    const auto probs = cipp::transition_probabilities(ps, 0, unvisited, 1.0, 1.0);

    REQUIRE(probs.size() == unvisited.size());
    double sum = 0.0;
    for (const double p : probs) {
        CHECK(p >= 0.0);
        sum += p;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("closer nodes are more likely at equal pheromone") {
    const auto cm = line_matrix();
    const cipp::PheromoneState ps(cm, 1.0);
    const auto probs = cipp::transition_probabilities(ps, 0, {1, 2}, 1.0, 1.0);
    CHECK(probs[0] > probs[1]);
}

TEST_CASE("stronger pheromone wins at equal distance") {
    // symmetric triangle, then load one edge with extra pheromone
    std::vector<double> costs{0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0};
    const cipp::CostMatrix cm(3, std::move(costs), {1.0, 2.0});
    cipp::PheromoneState ps(cm, 1.0);
    ps.tau[0 * 3 + 2] = 5.0;

    const auto probs = cipp::transition_probabilities(ps, 0, {1, 2}, 1.0, 1.0);
    CHECK(probs[1] > probs[0]);
}

TEST_CASE("zero cost edges stay finite in the heuristic") {
    std::vector<double> costs{0.0, 0.0, 0.0, 0.0};
    const cipp::CostMatrix cm(2, std::move(costs), {1.0, 2.0});
    const cipp::PheromoneState ps(cm, 1.0);
    CHECK(ps.eta_at(0, 1) == cipp::kEtaCap);
}

TEST_CASE("constructed tours are permutations") {
    const auto cm = random_matrix(9, 3);
    const cipp::PheromoneState ps(cm, 1.0);
    const cipp::AcoParams params;
    auto rng = cipp::SplitMix64::stream(5, 0, 0);
    for (int k = 0; k < 50; ++k) {
        const auto tour = cipp::construct_tour(ps, params, rng);
        CHECK(is_permutation_of_n(tour, 9));
    }
}

TEST_CASE("identical rng streams give identical tours") {
    const auto cm = random_matrix(9, 3);
    const cipp::PheromoneState ps(cm, 1.0);
    const cipp::AcoParams params;
    auto rng_a = cipp::SplitMix64::stream(5, 1, 2);
    auto rng_b = cipp::SplitMix64::stream(5, 1, 2);
    CHECK(cipp::construct_tour(ps, params, rng_a) == cipp::construct_tour(ps, params, rng_b));
}

TEST_CASE("edge deposits reward the walked edges") {
    const auto cm = line_matrix();  // legs 0-1 and 1-2 cost 1 each
    cipp::PheromoneState ps(cm, 1.0);
    cipp::AcoParams params;
    params.evaporation = 0.5;
    params.deposit_q = 1.0;

    cipp::deposit_and_evaporate(ps, {{{0, 1, 2}, 2.0}}, cm, params);
    CHECK(ps.tau_at(0, 1) == doctest::Approx(0.5 + 1.0));
    CHECK(ps.tau_at(1, 0) == doctest::Approx(0.5 + 1.0));
    CHECK(ps.tau_at(1, 2) == doctest::Approx(0.5 + 1.0));
    CHECK(ps.tau_at(0, 2) == doctest::Approx(0.5));
}

TEST_CASE("tour deposits spread the inverse fitness evenly") {
    const auto cm = line_matrix();
    cipp::PheromoneState ps(cm, 1.0);
    cipp::AcoParams params;
    params.evaporation = 0.5;
    params.deposit_rule = cipp::DepositRule::TourInverseFitness;

    cipp::deposit_and_evaporate(ps, {{{0, 1, 2}, 2.0}}, cm, params);
    CHECK(ps.tau_at(0, 1) == doctest::Approx(0.5 + 0.5));
    CHECK(ps.tau_at(1, 2) == doctest::Approx(0.5 + 0.5));
    CHECK(ps.tau_at(0, 2) == doctest::Approx(0.5));
}

TEST_CASE("pheromone never evaporates to zero") {
    const auto cm = line_matrix();
    cipp::PheromoneState ps(cm, 1.0);
    cipp::AcoParams params;
    params.evaporation = 0.999;
    for (int i = 0; i < 100; ++i) cipp::deposit_and_evaporate(ps, {}, cm, params);
    for (const double t : ps.tau) CHECK(t >= cipp::kTauFloor);
}

TEST_CASE("solver finds the obvious best path on a line") {
    const auto cm = line_matrix();
    cipp::AcoParams params;
    params.n_ants = 20;
    params.max_iterations = 30;
    const auto result = cipp::solve(cm, params);

    CHECK(result.best_fitness == doctest::Approx(2.0));
    CHECK(result.iterations_run == 30);
    const bool forward = result.best_order == std::vector<int>{0, 1, 2};
    const bool backward = result.best_order == std::vector<int>{2, 1, 0};
    CHECK((forward || backward));
}

TEST_CASE("best fitness history never goes up") {
    const auto cm = random_matrix(12, 17);
    cipp::AcoParams params;
    params.n_ants = 15;
    params.max_iterations = 60;
    const auto result = cipp::solve(cm, params);

    REQUIRE(result.history.size() == 60);
    for (std::size_t i = 1; i < result.history.size(); ++i)
        CHECK(result.history[i] <= result.history[i - 1]);
    CHECK(result.best_fitness == result.history.back());
    CHECK(result.best_fitness == cipp::path_fitness(result.best_order, cm));
}

TEST_CASE("same seed reproduces the whole run") {
    const auto cm = random_matrix(10, 23);
    cipp::AcoParams params;
    params.n_ants = 10;
    params.max_iterations = 25;
    params.seed = 99;

    const auto a = cipp::solve(cm, params);
    const auto b = cipp::solve(cm, params);
    CHECK(a.best_order == b.best_order);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.history == b.history);
}

TEST_CASE("closed tours charge the return edge") {
    const auto cm = line_matrix();
    cipp::AcoParams params;
    params.n_ants = 10;
    params.max_iterations = 20;
    params.closed_tour = true;
    const auto result = cipp::solve(cm, params);
    CHECK(result.best_fitness == doctest::Approx(4.0));
}

TEST_CASE("observer sees every iteration and a live pheromone field") {
    const auto cm = random_matrix(7, 5);
    cipp::AcoParams params;
    params.n_ants = 8;
    params.max_iterations = 15;

    int calls = 0;
    bool floor_ok = true;
    int last_iteration = 0;
    const auto result = cipp::solve(cm, params,
                                    [&](int iteration, const cipp::PheromoneState& state,
                                        double best) {
                                        ++calls;
                                        last_iteration = iteration;
                                        for (const double t : state.tau)
                                            floor_ok = floor_ok && t >= cipp::kTauFloor;
                                        CHECK(best > 0.0);
                                    });
    CHECK(calls == 15);
    CHECK(last_iteration == 15);
    CHECK(floor_ok);
    CHECK(result.iterations_run == 15);
}

TEST_CASE("nonsense parameters are rejected up front") {
    const auto cm = line_matrix();
    cipp::AcoParams params;

    params.n_ants = 0;
    CHECK_THROWS_AS(cipp::solve(cm, params), cipp::ValidationError);
    params = {};
    params.evaporation = 1.5;
    CHECK_THROWS_AS(cipp::solve(cm, params), cipp::ValidationError);
    params = {};
    params.evaporation = 0.0;
    CHECK_THROWS_AS(cipp::solve(cm, params), cipp::ValidationError);
    params = {};
    params.max_iterations = 0;
    CHECK_THROWS_AS(cipp::solve(cm, params), cipp::ValidationError);
    params = {};
    params.pheromone_influence = -1.0;
    CHECK_THROWS_AS(cipp::solve(cm, params), cipp::ValidationError);
    params = {};
    params.initial_pheromone = 0.0;
    CHECK_THROWS_AS(cipp::solve(cm, params), cipp::ValidationError);
}

}
