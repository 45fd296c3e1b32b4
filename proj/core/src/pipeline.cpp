#include "cipp/pipeline.hpp"

#include <fstream>

#include <json.hpp>

#include "cipp/artifacts.hpp"
#include "cipp/baf.hpp"
#include "cipp/errors.hpp"
#include "cipp/mesh_io.hpp"
#include "cipp/oracle.hpp"
#include "cipp/slicing.hpp"
#include "cipp/svg.hpp"

namespace cipp {

PreparedScene prepare_scene(const RunConfig& cfg) {
    PreparedScene scene;
    scene.mesh = load_mesh(cfg.mesh_path);
    if (cfg.unit_scale != 1.0) scene.mesh.scale(cfg.unit_scale);

    scene.formation = build_formation(cfg.camera, cfg.rows, cfg.cols, cfg.overlap_w, cfg.overlap_h);

    const double stitch_w = cfg.stitch_overlap_w >= 0.0 ? cfg.stitch_overlap_w
                                                        : 0.1 * scene.formation.footprint_w;
    const double stitch_h = cfg.stitch_overlap_h >= 0.0 ? cfg.stitch_overlap_h
                                                        : 0.1 * scene.formation.footprint_h;
    scene.spacing = viewpoint_spacing(scene.formation, stitch_w, stitch_h);

    scene.dbscan_eps = cfg.dbscan_eps > 0.0 ? cfg.dbscan_eps : 2.0 * scene.spacing.delta_w;
    scene.dbscan_min_pts = cfg.dbscan_min_pts;

    scene.levels = slice_levels(scene.mesh, scene.spacing, scene.formation.footprint_h);
    scene.viewpoints = build_viewpoint_set(scene.mesh, scene.formation, scene.spacing,
                                           cfg.camera.working_distance, scene.dbscan_eps,
                                           scene.dbscan_min_pts);
    scene.costs = build_cost_matrix(scene.viewpoints, cfg.weights);
    return scene;
}

PlanSummary run_plan(const RunConfig& cfg) {
    const PreparedScene scene = prepare_scene(cfg);
    const AcoResult result = solve(scene.costs, cfg.aco);

    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + cfg.output_dir.string());

    write_viewpoints_csv(scene.viewpoints, cfg.output_dir / "viewpoints.csv");
    write_viewpoints_json(scene.viewpoints, cfg.output_dir / "viewpoints.json");
    write_path_json(scene.viewpoints, result.best_order, "aco", result.best_fitness, cfg.weights,
                    cfg.config_version, cfg.output_dir / "path.json");
    write_history_csv(result.history, cfg.output_dir / "history.csv");
    write_plan_svg(scene.mesh, scene.viewpoints, result.best_order, result.history,
                   cfg.output_dir / "plots.svg");

    PlanSummary summary;
    summary.output_dir = cfg.output_dir;
    summary.viewpoint_count = static_cast<int>(scene.viewpoints.viewpoints.size());
    summary.layer_count = static_cast<int>(scene.levels.size());
    summary.fitness = result.best_fitness;
    return summary;
}

CompareSummary run_compare(const RunConfig& cfg, int n_seeds) {
    if (n_seeds < 1) throw ValidationError("compare needs at least one seed");
    const PreparedScene scene = prepare_scene(cfg);

    const BafPath baseline = baf_path(scene.viewpoints, scene.costs);

    std::vector<double> fitnesses;
    fitnesses.reserve(n_seeds);
    for (int k = 0; k < n_seeds; ++k) {
        AcoParams params = cfg.aco;
        params.seed = cfg.aco.seed + static_cast<std::uint64_t>(k);
        fitnesses.push_back(solve(scene.costs, params).best_fitness);
    }

    const CompareStats stats = summarize_comparison(baseline.fitness, fitnesses);

    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + cfg.output_dir.string());
    const auto csv = cfg.output_dir / "compare.csv";
    write_compare_csv(stats, csv);

    CompareSummary summary;
    summary.baf_fitness = stats.baf_fitness;
    summary.aco_mean = stats.aco_mean;
    summary.aco_std = stats.aco_std;
    summary.improvement_percent = stats.improvement_percent;
    summary.output_csv = csv;
    return summary;
}

OracleSummary run_oracle(const RunConfig& cfg, int max_m) {
    if (max_m < 2 || max_m > 10)
        throw ValidationError("oracle max-m must lie in [2, 10]");
    const PreparedScene scene = prepare_scene(cfg);

    const int m = static_cast<int>(scene.viewpoints.viewpoints.size());
    if (m > max_m)
        throw ValidationError("too many viewpoints for exhaustive search: " + std::to_string(m) +
                              " > " + std::to_string(max_m));

    const OracleResult truth = exhaustive_best_path(scene.costs, cfg.aco.closed_tour);
    const AcoResult result = solve(scene.costs, cfg.aco);

    OracleSummary summary;
    summary.viewpoint_count = m;
    summary.optimum = truth.best_fitness;
    summary.aco_fitness = result.best_fitness;
    summary.gap_percent = truth.best_fitness > 0.0
                              ? (result.best_fitness - truth.best_fitness) / truth.best_fitness * 100.0
                              : 0.0;
    summary.paths_evaluated = truth.paths_evaluated;

    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + cfg.output_dir.string());
    summary.output_json = cfg.output_dir / "oracle.json";

    nlohmann::ordered_json doc;
    doc["viewpoints"] = m;
    doc["paths_evaluated"] = summary.paths_evaluated;
    doc["optimum"] = summary.optimum;
    doc["aco_fitness"] = summary.aco_fitness;
    doc["gap_percent"] = summary.gap_percent;
    std::ofstream out(summary.output_json);
    if (!out) throw IoError("cannot write: " + summary.output_json.string());
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) throw IoError("write failed: " + summary.output_json.string());

    return summary;
}

} // namespace cipp
