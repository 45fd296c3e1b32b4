#pragma once

#include <filesystem>
#include <vector>

#include "cipp/mesh.hpp"
#include "cipp/viewpoints.hpp"

namespace cipp {

// Three-panel overview: top-down structure and path, side elevation, and
// the best-fitness convergence curve.
void write_plan_svg(const TriangleMesh& mesh, const ViewpointSet& vps,
                    const std::vector<int>& order, const std::vector<double>& history,
                    const std::filesystem::path& file);

} // namespace cipp
