#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cipp/path_cost.hpp"
#include "cipp/viewpoints.hpp"

namespace cipp {

// Shortest decimal text that round-trips the exact double, so repeated
// runs emit byte-identical files.
std::string format_double(double v);

void write_viewpoints_csv(const ViewpointSet& vps, const std::filesystem::path& file);
void write_viewpoints_json(const ViewpointSet& vps, const std::filesystem::path& file);

void write_path_json(const ViewpointSet& vps, const std::vector<int>& order,
                     const std::string& method, double fitness, const CostWeights& weights,
                     int config_version, const std::filesystem::path& file);

void write_history_csv(const std::vector<double>& history, const std::filesystem::path& file);

struct CompareStats {
    double baf_fitness = 0.0;
    double aco_mean = 0.0;
    double aco_std = 0.0;
    double improvement_percent = 0.0;
    std::vector<double> aco_fitnesses;
};

CompareStats summarize_comparison(double baf_fitness, const std::vector<double>& aco_fitnesses);
void write_compare_csv(const CompareStats& stats, const std::filesystem::path& file);

} // namespace cipp
