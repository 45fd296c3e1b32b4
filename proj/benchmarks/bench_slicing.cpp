#include <benchmark/benchmark.h>

#include "cipp/formation.hpp"
#include "cipp/slicing.hpp"
#include "cipp/synthetic.hpp"
#include "cipp/viewpoints.hpp"

namespace {

cipp::FormationSpec survey_formation() {
    const cipp::CameraSpec cam{49.4 * 3.14159265358979323846 / 180.0,
                               63.0 * 3.14159265358979323846 / 180.0, 20.0};
    return cipp::build_formation(cam, 2, 2, 1.0240630511945596, 2.7958888329355602);
}

void BM_SliceTwinBridge(benchmark::State& state) {
    const cipp::TriangleMesh mesh = cipp::make_twin_bridge();
    const auto fs = survey_formation();
    const auto spacing = cipp::viewpoint_spacing(fs, 4.8, 3.4);
    const auto levels = cipp::slice_levels(mesh, spacing, fs.footprint_h);
    for (auto _ : state) {
        for (const double level : levels) {
            benchmark::DoNotOptimize(cipp::slice_mesh(mesh, level));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(levels.size()));
}
BENCHMARK(BM_SliceTwinBridge);

void BM_ViewpointSetBoxTower(benchmark::State& state) {
    const cipp::TriangleMesh mesh = cipp::make_box_tower();
    const auto fs = survey_formation();
    const auto spacing = cipp::viewpoint_spacing(fs, 4.8, 3.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cipp::build_viewpoint_set(mesh, fs, spacing, 20.0, 2.0 * spacing.delta_w, 3));
    }
}
BENCHMARK(BM_ViewpointSetBoxTower)->Unit(benchmark::kMillisecond);

} // namespace
