#pragma once

#include <Eigen/Core>

#include "cipp/mesh.hpp"

namespace cipp {

// Closed axis-aligned box, 12 triangles, outward winding.
TriangleMesh make_box(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi);

// Benchmark stand-ins for real survey models. The tower is a plain
// 150 x 210 x 231 m block. The twin-tower scene has two 380 m blocks
// joined by an open-ended bridge tube at mid height, so low slices fall
// into two clusters while bridge-height slices connect into one.
TriangleMesh make_box_tower();
TriangleMesh make_twin_bridge();

} // namespace cipp
