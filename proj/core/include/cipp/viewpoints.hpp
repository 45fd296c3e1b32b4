#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "cipp/formation.hpp"
#include "cipp/mesh.hpp"
#include "cipp/slicing.hpp"

namespace cipp {

// One stop of the formation: where the virtual leader hovers and which way
// the cameras face. The heading is horizontal and unit length.
struct Viewpoint {
    Eigen::Vector3d position = Eigen::Vector3d::Zero();
    Eigen::Vector3d heading = Eigen::Vector3d::UnitX();
    int layer = 0;
    int cluster = 0;
};

struct ViewpointSet {
    std::vector<Viewpoint> viewpoints;
    SpacingSpec spacing;
    Eigen::Vector3d bbox_min = Eigen::Vector3d::Zero();
    Eigen::Vector3d bbox_max = Eigen::Vector3d::Zero();
};

// Pushes every contour point outward by the working distance along the
// local in-plane normal and faces the result back at the surface. One
// viewpoint per contour point, in contour order; layer is left for the
// caller to fill in. The outward side is chosen away from the contour's
// area centroid, or away from outward_reference (typically the cluster
// centroid) for open contours.
std::vector<Viewpoint> offset_contour(const SliceContour& contour, double d,
                                      const std::optional<Eigen::Vector2d>& outward_reference = {});

// Greedy arc-length thinning: keeps the first viewpoint, then repeatedly
// the first one at least `step` further along the polyline through the
// input positions. Closed sequences stop before wrapping past the start.
std::vector<Viewpoint> downsample_arc_walk(const std::vector<Viewpoint>& ring, bool closed,
                                           double step);

// Full geometry pipeline: slice levels, contour extraction, resampling,
// clustering, outward offsetting and arc-length downsampling, merged in
// (layer, cluster, contour, arc position) order. resample_spacing <= 0
// picks delta_w / 8.
ViewpointSet build_viewpoint_set(const TriangleMesh& mesh, const FormationSpec& fs,
                                 const SpacingSpec& spacing, double d, double dbscan_eps,
                                 int dbscan_min_pts, double resample_spacing = -1.0);

} // namespace cipp
