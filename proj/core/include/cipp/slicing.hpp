#pragma once

#include <Eigen/Core>
#include <vector>

#include "cipp/formation.hpp"
#include "cipp/mesh.hpp"

namespace cipp {

// Intersection of the mesh with one horizontal plane, chained into a
// polyline. Closed contours treat the last point as adjacent to the first
// without repeating it.
struct SliceContour {
    double level = 0.0;
    std::vector<Eigen::Vector3d> points;
    bool closed = false;
    int cluster_id = -1;
};

// Plane heights covering the structure: an arithmetic walk from
// min_z + footprint_h/2 up to max_z - footprint_h/2 in steps of delta_h.
// When the walk stops noticeably short of the top (more than a quarter
// step), the top level is appended so the highest band is still covered.
// Meshes shorter than footprint_h get a single mid-height level.
std::vector<double> slice_levels(const TriangleMesh& mesh, const SpacingSpec& spacing,
                                 double footprint_h);

// Cross-section at z = level. Throws when no triangle crosses the plane.
std::vector<SliceContour> slice_mesh(const TriangleMesh& mesh, double level);

// Splits long polyline edges so consecutive points are at most max_spacing
// apart. Endpoints are preserved.
SliceContour resample_contour(const SliceContour& contour, double max_spacing);

double contour_length(const SliceContour& contour);

} // namespace cipp
