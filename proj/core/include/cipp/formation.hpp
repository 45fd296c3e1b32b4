#pragma once

#include <Eigen/Core>
#include <vector>

namespace cipp {

// Camera field of view and working distance. alpha spans the vertical
// direction, beta the horizontal one, both in radians.
struct CameraSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double working_distance = 0.0;
};

// Rectangle a single camera covers on the target surface.
struct Footprint {
    double height = 0.0;
    double width = 0.0;
};

// A rows x cols grid of cameras with pairwise overlaps. Offsets are the
// member positions relative to the virtual leader, which sits at the
// centroid of the union footprint. The x axis is the camera axis, so every
// offset has a zero x component.
struct FormationSpec {
    int rows = 1;
    int cols = 1;
    double pair_overlap_w = 0.0;
    double pair_overlap_h = 0.0;
    std::vector<Eigen::Vector3d> offsets;
    double footprint_w = 0.0;
    double footprint_h = 0.0;
};

// Distance between consecutive viewpoints along a contour (delta_w) and
// between slice levels (delta_h), derived from the union footprint minus
// the stitching overlaps.
struct SpacingSpec {
    double delta_w = 0.0;
    double delta_h = 0.0;
    double stitch_overlap_w = 0.0;
    double stitch_overlap_h = 0.0;
};

Footprint camera_footprint(const CameraSpec& cam);

// Relative position of a neighbouring formation member whose footprint
// overlaps ours by (overlap_w, overlap_h). gamma is the bearing of the
// neighbour in the footprint plane: 0 is straight up, pi/2 is to the side.
Eigen::Vector3d pair_offset(const Footprint& fp, double overlap_w, double overlap_h,
                            double gamma);

FormationSpec build_formation(const CameraSpec& cam, int rows, int cols, double overlap_w,
                              double overlap_h);

SpacingSpec viewpoint_spacing(const FormationSpec& fs, double stitch_overlap_w,
                              double stitch_overlap_h);

} // namespace cipp
