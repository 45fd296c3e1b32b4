#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cipp/aco.hpp"
#include "cipp/config.hpp"
#include "cipp/mesh.hpp"
#include "cipp/path_cost.hpp"
#include "cipp/viewpoints.hpp"

namespace cipp {

// Shared front half of every run mode: mesh in, cost matrix out.
struct PreparedScene {
    TriangleMesh mesh;
    FormationSpec formation;
    SpacingSpec spacing;
    double dbscan_eps = 0.0;
    int dbscan_min_pts = 0;
    std::vector<double> levels;
    ViewpointSet viewpoints;
    CostMatrix costs;
};

PreparedScene prepare_scene(const RunConfig& cfg);

struct PlanSummary {
    std::filesystem::path output_dir;
    int viewpoint_count = 0;
    int layer_count = 0;
    double fitness = 0.0;
};

// Plans with ACO and writes viewpoints.csv, viewpoints.json, path.json,
// history.csv and plots.svg into the output directory.
PlanSummary run_plan(const RunConfig& cfg);

struct CompareSummary {
    double baf_fitness = 0.0;
    double aco_mean = 0.0;
    double aco_std = 0.0;
    double improvement_percent = 0.0;
    std::filesystem::path output_csv;
};

// BAF once, ACO across n_seeds consecutive seeds; writes compare.csv.
CompareSummary run_compare(const RunConfig& cfg, int n_seeds);

struct OracleSummary {
    int viewpoint_count = 0;
    double optimum = 0.0;
    double aco_fitness = 0.0;
    double gap_percent = 0.0;
    std::uint64_t paths_evaluated = 0;
    std::filesystem::path output_json;
};

// Exhaustive ground truth against the ACO result on small scenes; refuses
// to enumerate more than max_m viewpoints.
OracleSummary run_oracle(const RunConfig& cfg, int max_m);

} // namespace cipp
