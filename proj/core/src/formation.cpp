#include "cipp/formation.hpp"

#include <cmath>
#include <limits>

#include "cipp/errors.hpp"

namespace cipp {

namespace {

// Sign with a dead zone so that bearings like pi/2, whose cosine is only
// zero up to rounding, still produce a zero component.
double sgn(double x) {
    constexpr double eps = 1e-12;
    if (x > eps) return 1.0;
    if (x < -eps) return -1.0;
    return 0.0;
}

void check_overlap(double overlap, double extent, const char* which) {
    if (!(overlap > 0.0) || !(overlap <= extent))
        throw ValidationError(std::string("formation overlap out of range: ") + which);
}

} // namespace

Footprint camera_footprint(const CameraSpec& cam) {
    constexpr double pi = 3.14159265358979323846;
    if (!(cam.alpha > 0.0) || !(cam.alpha < pi))
        throw ValidationError("camera alpha must lie in (0, pi)");
    if (!(cam.beta > 0.0) || !(cam.beta < pi))
        throw ValidationError("camera beta must lie in (0, pi)");
    if (!(cam.working_distance > 0.0))
        throw ValidationError("camera working distance must be positive");

    Footprint fp;
    fp.height = 2.0 * cam.working_distance * std::tan(cam.alpha / 2.0);
    fp.width = 2.0 * cam.working_distance * std::tan(cam.beta / 2.0);
    return fp;
}

Eigen::Vector3d pair_offset(const Footprint& fp, double overlap_w, double overlap_h,
                            double gamma) {
    check_overlap(overlap_w, fp.width, "overlap_w");
    check_overlap(overlap_h, fp.height, "overlap_h");
    return {0.0, (fp.width - overlap_w) * sgn(std::sin(gamma)),
            (fp.height - overlap_h) * sgn(std::cos(gamma))};
}

FormationSpec build_formation(const CameraSpec& cam, int rows, int cols, double overlap_w,
                              double overlap_h) {
    if (rows < 1 || cols < 1)
        throw ValidationError("formation grid must have at least one row and column");

    const Footprint fp = camera_footprint(cam);
    if (cols > 1) check_overlap(overlap_w, fp.width, "overlap_w");
    if (rows > 1) check_overlap(overlap_h, fp.height, "overlap_h");

    FormationSpec fs;
    fs.rows = rows;
    fs.cols = cols;
    fs.pair_overlap_w = overlap_w;
    fs.pair_overlap_h = overlap_h;

    // Chain neighbour offsets across the grid, row-major from the bottom
    // left cell: sideways neighbours sit at bearing pi/2, the one above at
    // bearing 0. A dimension of size one never uses its overlap, so feed
    // pair_offset a placeholder there to keep its validation happy.
    constexpr double half_pi = 1.57079632679489661923;
    const double ow = cols > 1 ? overlap_w : fp.width / 2.0;
    const double oh = rows > 1 ? overlap_h : fp.height / 2.0;
    fs.offsets.reserve(static_cast<std::size_t>(rows) * cols);
    Eigen::Vector3d row_start = Eigen::Vector3d::Zero();
    for (int r = 0; r < rows; ++r) {
        Eigen::Vector3d cell = row_start;
        for (int c = 0; c < cols; ++c) {
            fs.offsets.push_back(cell);
            if (c + 1 < cols) cell += pair_offset(fp, ow, oh, half_pi);
        }
        if (r + 1 < rows) row_start += pair_offset(fp, ow, oh, 0.0);
    }

    // Centre the virtual leader on the union footprint.
    double lo_y = std::numeric_limits<double>::infinity(), hi_y = -lo_y;
    double lo_z = std::numeric_limits<double>::infinity(), hi_z = -lo_z;
    for (const auto& o : fs.offsets) {
        lo_y = std::min(lo_y, o.y() - fp.width / 2.0);
        hi_y = std::max(hi_y, o.y() + fp.width / 2.0);
        lo_z = std::min(lo_z, o.z() - fp.height / 2.0);
        hi_z = std::max(hi_z, o.z() + fp.height / 2.0);
    }
    const Eigen::Vector3d centre(0.0, (lo_y + hi_y) / 2.0, (lo_z + hi_z) / 2.0);
    for (auto& o : fs.offsets) o -= centre;

    fs.footprint_w = cols * fp.width - (cols - 1) * overlap_w;
    fs.footprint_h = rows * fp.height - (rows - 1) * overlap_h;
    return fs;
}

SpacingSpec viewpoint_spacing(const FormationSpec& fs, double stitch_overlap_w,
                              double stitch_overlap_h) {
    if (!(stitch_overlap_w >= 0.0) || !(stitch_overlap_w < fs.footprint_w))
        throw ValidationError("stitch overlap (width) out of range");
    if (!(stitch_overlap_h >= 0.0) || !(stitch_overlap_h < fs.footprint_h))
        throw ValidationError("stitch overlap (height) out of range");

    SpacingSpec sp;
    sp.stitch_overlap_w = stitch_overlap_w;
    sp.stitch_overlap_h = stitch_overlap_h;
    sp.delta_w = fs.footprint_w - stitch_overlap_w;
    sp.delta_h = fs.footprint_h - stitch_overlap_h;
    return sp;
}

} // namespace cipp
