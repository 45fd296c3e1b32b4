#pragma once

#include <Eigen/Core>
#include <vector>

#include "cipp/slicing.hpp"

namespace cipp {

// Density clustering over 2D points. Returns one label per point in input
// order; -1 marks noise. Labels are numbered by order of cluster discovery.
std::vector<int> dbscan_labels(const std::vector<Eigen::Vector2d>& points, double eps,
                               int min_pts);

// Labels the contours of one slice level. Each contour takes the majority
// label over its points, noise points side with their nearest cluster, and
// cluster ids are renumbered from 0 in order of first appearance.
std::vector<SliceContour> cluster_contours(std::vector<SliceContour> contours, double eps,
                                           int min_pts);

} // namespace cipp
