#include <benchmark/benchmark.h>

#include <Eigen/Core>
#include <vector>

#include "cipp/aco.hpp"
#include "cipp/path_cost.hpp"
#include "cipp/rng.hpp"

namespace {

cipp::CostMatrix random_instance(int m, std::uint64_t seed) {
    cipp::SplitMix64 rng(cipp::SplitMix64::stream(seed, 0, 0));
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        pts.emplace_back(100.0 * rng.next_double(), 100.0 * rng.next_double(),
                         100.0 * rng.next_double());
    }
    return cipp::build_cost_matrix(pts, cipp::CostWeights{});
}

void BM_ConstructTour(benchmark::State& state) {
    const auto cm = random_instance(static_cast<int>(state.range(0)), 7);
    const cipp::AcoParams params;
    const cipp::PheromoneState ps(cm, params.initial_pheromone);
    cipp::SplitMix64 rng(cipp::SplitMix64::stream(params.seed, 0, 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cipp::construct_tour(ps, params, rng));
    }
}
BENCHMARK(BM_ConstructTour)->Arg(8)->Arg(64)->Arg(256);

void BM_SolveSmall(benchmark::State& state) {
    const auto cm = random_instance(static_cast<int>(state.range(0)), 7);
    cipp::AcoParams params;
    params.max_iterations = 50;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cipp::solve(cm, params));
    }
}
BENCHMARK(BM_SolveSmall)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

} // namespace
