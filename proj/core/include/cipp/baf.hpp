#pragma once

#include <vector>

#include "cipp/path_cost.hpp"
#include "cipp/viewpoints.hpp"

namespace cipp {

struct BafPath {
    std::vector<int> order;
    double fitness = 0.0;
};

// Boustrophedon sweep baseline: bottom layer first, every other layer
// walked in reverse so the path snakes up the structure instead of
// flying back to the start of each ring.
BafPath baf_path(const ViewpointSet& vps, const CostMatrix& cm);

} // namespace cipp
