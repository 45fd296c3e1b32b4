#include "cipp/config.hpp"

#include <fstream>
#include <optional>

#include <json.hpp>

#include "cipp/errors.hpp"

namespace cipp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ValidationError("config field '" + field + "' " + why);
}

const json* maybe_block(const json& j, const char* key) {
    if (!j.contains(key)) return nullptr;
    if (!j.at(key).is_object()) fail(key, "must be an object");
    return &j.at(key);
}

double get_number(const json& j, const std::string& field, std::optional<double> fallback = {}) {
    const auto key = field.substr(field.rfind('.') + 1);
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        fail(field, "is required");
    }
    if (!j.at(key).is_number()) fail(field, "must be a number");
    return j.at(key).get<double>();
}

int get_int(const json& j, const std::string& field, std::optional<int> fallback = {}) {
    const auto key = field.substr(field.rfind('.') + 1);
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        fail(field, "is required");
    }
    if (!j.at(key).is_number_integer()) fail(field, "must be an integer");
    return j.at(key).get<int>();
}

std::string get_string(const json& j, const std::string& field,
                       std::optional<std::string> fallback = {}) {
    const auto key = field.substr(field.rfind('.') + 1);
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        fail(field, "is required");
    }
    if (!j.at(key).is_string()) fail(field, "must be a string");
    return j.at(key).get<std::string>();
}

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

} // namespace

RunConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open config: " + file.string());

    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("malformed config " + file.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ValidationError("config root must be a JSON object");

    RunConfig cfg;
    cfg.config_version = get_int(j, "config_version", 1);
    if (cfg.config_version != 1) fail("config_version", "must be 1");

    cfg.mesh_path = get_string(j, "mesh_path");
    if (cfg.mesh_path.is_relative()) cfg.mesh_path = file.parent_path() / cfg.mesh_path;
    cfg.unit_scale = get_number(j, "unit_scale", 1.0);
    if (!(cfg.unit_scale > 0.0)) fail("unit_scale", "must be positive");

    const json* camera = maybe_block(j, "camera");
    if (!camera) fail("camera", "is required");
    const double alpha_deg = get_number(*camera, "camera.alpha_deg");
    const double beta_deg = get_number(*camera, "camera.beta_deg");
    if (!(alpha_deg > 0.0) || !(alpha_deg < 180.0)) fail("camera.alpha_deg", "must lie in (0, 180)");
    if (!(beta_deg > 0.0) || !(beta_deg < 180.0)) fail("camera.beta_deg", "must lie in (0, 180)");
    cfg.camera.alpha = alpha_deg * kDegToRad;
    cfg.camera.beta = beta_deg * kDegToRad;
    cfg.camera.working_distance = get_number(*camera, "camera.distance_m");
    if (!(cfg.camera.working_distance > 0.0)) fail("camera.distance_m", "must be positive");

    if (const json* formation = maybe_block(j, "formation")) {
        cfg.rows = get_int(*formation, "formation.rows", 2);
        cfg.cols = get_int(*formation, "formation.cols", 2);
        if (cfg.rows < 1) fail("formation.rows", "must be at least 1");
        if (cfg.cols < 1) fail("formation.cols", "must be at least 1");
        cfg.overlap_w = get_number(*formation, "formation.overlap_w_m", cfg.cols > 1 ? std::optional<double>{} : 0.0);
        cfg.overlap_h = get_number(*formation, "formation.overlap_h_m", cfg.rows > 1 ? std::optional<double>{} : 0.0);
        cfg.stitch_overlap_w = get_number(*formation, "formation.stitch_overlap_w_m", -1.0);
        if (formation->contains("stitch_overlap_w_m") && cfg.stitch_overlap_w < 0.0)
            fail("formation.stitch_overlap_w_m", "must be nonnegative");
        cfg.stitch_overlap_h = get_number(*formation, "formation.stitch_overlap_h_m", -1.0);
        if (formation->contains("stitch_overlap_h_m") && cfg.stitch_overlap_h < 0.0)
            fail("formation.stitch_overlap_h_m", "must be nonnegative");
    } else {
        fail("formation", "is required");
    }

    if (const json* dbscan = maybe_block(j, "dbscan")) {
        cfg.dbscan_eps = get_number(*dbscan, "dbscan.eps", -1.0);
        if (dbscan->contains("eps") && !(cfg.dbscan_eps > 0.0)) fail("dbscan.eps", "must be positive");
        cfg.dbscan_min_pts = get_int(*dbscan, "dbscan.min_pts", 3);
        if (cfg.dbscan_min_pts < 1) fail("dbscan.min_pts", "must be at least 1");
    }

    if (const json* weights = maybe_block(j, "weights")) {
        cfg.weights.horizontal = get_number(*weights, "weights.w1", 1.0);
        cfg.weights.vertical = get_number(*weights, "weights.w2", 2.0);
        if (cfg.weights.horizontal < 0.0) fail("weights.w1", "must be nonnegative");
        if (cfg.weights.vertical < 0.0) fail("weights.w2", "must be nonnegative");
        if (!(cfg.weights.horizontal + cfg.weights.vertical > 0.0))
            fail("weights.w2", "must not both be zero with w1");
    }

    if (const json* aco = maybe_block(j, "aco")) {
        cfg.aco.n_ants = get_int(*aco, "aco.n_ants", 100);
        if (cfg.aco.n_ants < 1) fail("aco.n_ants", "must be at least 1");
        cfg.aco.pheromone_influence = get_number(*aco, "aco.alpha", 1.0);
        if (cfg.aco.pheromone_influence < 0.0) fail("aco.alpha", "must be nonnegative");
        cfg.aco.heuristic_influence = get_number(*aco, "aco.beta", 1.0);
        if (cfg.aco.heuristic_influence < 0.0) fail("aco.beta", "must be nonnegative");
        cfg.aco.deposit_q = get_number(*aco, "aco.q", 1.0);
        if (!(cfg.aco.deposit_q > 0.0)) fail("aco.q", "must be positive");
        cfg.aco.evaporation = get_number(*aco, "aco.rho", 0.05);
        if (!(cfg.aco.evaporation > 0.0) || !(cfg.aco.evaporation < 1.0))
            fail("aco.rho", "must lie in (0, 1)");
        cfg.aco.max_iterations = get_int(*aco, "aco.max_iterations", 500);
        if (cfg.aco.max_iterations < 1) fail("aco.max_iterations", "must be at least 1");
        if (aco->contains("seed")) {
            if (!aco->at("seed").is_number_integer()) fail("aco.seed", "must be an integer");
            cfg.aco.seed = aco->at("seed").get<std::uint64_t>();
        }
        cfg.aco.initial_pheromone = get_number(*aco, "aco.tau0", 1.0);
        if (!(cfg.aco.initial_pheromone > 0.0)) fail("aco.tau0", "must be positive");
        const std::string rule = get_string(*aco, "aco.deposit_rule", "edge");
        if (rule == "edge") cfg.aco.deposit_rule = DepositRule::EdgeInverseCost;
        else if (rule == "tour") cfg.aco.deposit_rule = DepositRule::TourInverseFitness;
        else fail("aco.deposit_rule", "must be 'edge' or 'tour'");
        if (aco->contains("closed_tour")) {
            if (!aco->at("closed_tour").is_boolean()) fail("aco.closed_tour", "must be a boolean");
            cfg.aco.closed_tour = aco->at("closed_tour").get<bool>();
        }
    }

    if (j.contains("mode")) {
        const std::string mode = get_string(j, "mode");
        if (mode == "plan") cfg.mode = RunMode::Plan;
        else if (mode == "compare") cfg.mode = RunMode::Compare;
        else if (mode == "oracle") cfg.mode = RunMode::Oracle;
        else fail("mode", "must be 'plan', 'compare' or 'oracle'");
    }
    if (j.contains("output_dir")) cfg.output_dir = get_string(j, "output_dir");

    return cfg;
}

const char* run_mode_name(RunMode mode) {
    switch (mode) {
    case RunMode::Plan: return "plan";
    case RunMode::Compare: return "compare";
    case RunMode::Oracle: return "oracle";
    }
    return "plan";
}

const char* deposit_rule_name(DepositRule rule) {
    return rule == DepositRule::EdgeInverseCost ? "edge" : "tour";
}

} // namespace cipp
