#pragma once

#include <filesystem>
#include <string>

#include "cipp/aco.hpp"
#include "cipp/formation.hpp"
#include "cipp/path_cost.hpp"

namespace cipp {

enum class RunMode { Plan, Compare, Oracle };

// Everything one run needs, loaded from a JSON file. Angles arrive in
// degrees and are stored in radians; negative spacing/dbscan values mean
// "derive the default from the formation footprint".
struct RunConfig {
    int config_version = 1;
    std::filesystem::path mesh_path;
    double unit_scale = 1.0;

    CameraSpec camera;
    int rows = 2;
    int cols = 2;
    double overlap_w = 0.0;
    double overlap_h = 0.0;
    double stitch_overlap_w = -1.0;
    double stitch_overlap_h = -1.0;

    double dbscan_eps = -1.0;
    int dbscan_min_pts = 3;

    CostWeights weights;
    AcoParams aco;

    RunMode mode = RunMode::Plan;
    std::filesystem::path output_dir = "out";
};

// Parses and validates; error messages name the offending field. Relative
// mesh paths are resolved against the config file's directory.
RunConfig load_config(const std::filesystem::path& file);

const char* run_mode_name(RunMode mode);
const char* deposit_rule_name(DepositRule rule);

} // namespace cipp
