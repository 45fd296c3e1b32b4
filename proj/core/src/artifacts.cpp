#include "cipp/artifacts.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "cipp/errors.hpp"

namespace cipp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot write: " + file.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out) throw IoError("write failed: " + file.string());
}

double unsigned_zero(double v) { return v == 0.0 ? 0.0 : v; }

ordered_json viewpoint_json(const Viewpoint& vp) {
    return ordered_json{{"x", unsigned_zero(vp.position.x())},
                        {"y", unsigned_zero(vp.position.y())},
                        {"z", unsigned_zero(vp.position.z())},
                        {"hx", unsigned_zero(vp.heading.x())},
                        {"hy", unsigned_zero(vp.heading.y())},
                        {"hz", unsigned_zero(vp.heading.z())},
                        {"layer", vp.layer},
                        {"cluster", vp.cluster}};
}

} // namespace

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_viewpoints_csv(const ViewpointSet& vps, const std::filesystem::path& file) {
    auto out = open_out(file);
    out << "layer,cluster,x,y,z,hx,hy,hz\n";
    for (const auto& vp : vps.viewpoints) {
        out << vp.layer << ',' << vp.cluster << ',' << format_double(vp.position.x()) << ','
            << format_double(vp.position.y()) << ',' << format_double(vp.position.z()) << ','
            << format_double(vp.heading.x()) << ',' << format_double(vp.heading.y()) << ','
            << format_double(vp.heading.z()) << '\n';
    }
    finish(out, file);
}

void write_viewpoints_json(const ViewpointSet& vps, const std::filesystem::path& file) {
    ordered_json doc;
    doc["spacing"] = ordered_json{{"delta_w", vps.spacing.delta_w},
                                  {"delta_h", vps.spacing.delta_h},
                                  {"stitch_overlap_w", vps.spacing.stitch_overlap_w},
                                  {"stitch_overlap_h", vps.spacing.stitch_overlap_h}};
    doc["source_bbox"] = ordered_json{
        {"min", {vps.bbox_min.x(), vps.bbox_min.y(), vps.bbox_min.z()}},
        {"max", {vps.bbox_max.x(), vps.bbox_max.y(), vps.bbox_max.z()}}};
    auto& list = doc["viewpoints"] = ordered_json::array();
    for (const auto& vp : vps.viewpoints) list.push_back(viewpoint_json(vp));

    auto out = open_out(file);
    out << doc.dump(2) << '\n';
    finish(out, file);
}

void write_path_json(const ViewpointSet& vps, const std::vector<int>& order,
                     const std::string& method, double fitness, const CostWeights& weights,
                     int config_version, const std::filesystem::path& file) {
    ordered_json doc;
    doc["method"] = method;
    doc["fitness"] = fitness;
    doc["weights"] = ordered_json{{"w1", weights.horizontal}, {"w2", weights.vertical}};
    auto& list = doc["waypoints"] = ordered_json::array();
    for (int idx : order) list.push_back(viewpoint_json(vps.viewpoints.at(idx)));
    doc["config_version"] = config_version;

    auto out = open_out(file);
    out << doc.dump(2) << '\n';
    finish(out, file);
}

void write_history_csv(const std::vector<double>& history, const std::filesystem::path& file) {
    auto out = open_out(file);
    out << "iteration,best_fitness\n";
    for (std::size_t i = 0; i < history.size(); ++i)
        out << (i + 1) << ',' << format_double(history[i]) << '\n';
    finish(out, file);
}

CompareStats summarize_comparison(double baf_fitness, const std::vector<double>& aco_fitnesses) {
    if (aco_fitnesses.empty()) throw ValidationError("comparison needs at least one run");
    CompareStats stats;
    stats.baf_fitness = baf_fitness;
    stats.aco_fitnesses = aco_fitnesses;

    double sum = 0.0;
    for (double f : aco_fitnesses) sum += f;
    stats.aco_mean = sum / static_cast<double>(aco_fitnesses.size());

    double var = 0.0;
    for (double f : aco_fitnesses) var += (f - stats.aco_mean) * (f - stats.aco_mean);
    stats.aco_std = std::sqrt(var / static_cast<double>(aco_fitnesses.size()));

    stats.improvement_percent =
        baf_fitness > 0.0 ? (baf_fitness - stats.aco_mean) / baf_fitness * 100.0 : 0.0;
    return stats;
}

void write_compare_csv(const CompareStats& stats, const std::filesystem::path& file) {
    auto out = open_out(file);
    out << "method,mean,std,improvement_percent\n";
    out << "baf," << format_double(stats.baf_fitness) << ",0,0\n";
    out << "aco," << format_double(stats.aco_mean) << ',' << format_double(stats.aco_std) << ','
        << format_double(stats.improvement_percent) << '\n';
    finish(out, file);
}

} // namespace cipp
