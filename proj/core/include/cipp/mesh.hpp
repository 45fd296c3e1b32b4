#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

namespace cipp {

// Indexed triangle soup in meters. `bbox_min`/`bbox_max` are derived from the
// referenced vertices and kept current by the factory functions in this module;
// call update_bounds() after mutating vertices or triangles directly.
struct TriangleMesh {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> triangles;
    Eigen::Vector3d bbox_min{0.0, 0.0, 0.0};
    Eigen::Vector3d bbox_max{0.0, 0.0, 0.0};

    void update_bounds();

    double min_z() const { return bbox_min.z(); }
    double max_z() const { return bbox_max.z(); }

    void scale(double factor);
};

double triangle_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c);

// Welds vertices closer than `weld_tol`, drops degenerate (area < `min_area`)
// and duplicate triangles, compacts unreferenced vertices. Idempotent; vertex
// and triangle counts never increase. Throws ValidationError("empty mesh ...")
// when nothing survives.
TriangleMesh preprocess(const TriangleMesh& mesh, double weld_tol = 1e-6, double min_area = 1e-9);

// Checks the structural invariants (index ranges, finiteness, non-degenerate
// triangles, bbox consistency); throws ValidationError on the first violation.
void validate_mesh(const TriangleMesh& mesh, double min_area = 1e-9);

} // namespace cipp
