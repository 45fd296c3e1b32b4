#pragma once

#include <Eigen/Core>
#include <vector>

#include "cipp/viewpoints.hpp"

namespace cipp {

// Travel cost between two viewpoints weighs the horizontal leg and the
// altitude change separately; a larger vertical weight discourages
// climbing.
struct CostWeights {
    double horizontal = 1.0;  // w1
    double vertical = 2.0;    // w2
};

class CostMatrix {
public:
    CostMatrix() = default;
    CostMatrix(int size, std::vector<double> values, CostWeights weights);

    int size() const { return size_; }
    double operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * size_ + j]; }
    const CostWeights& weights() const { return weights_; }

private:
    int size_ = 0;
    std::vector<double> values_;
    CostWeights weights_;
};

double edge_cost(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const CostWeights& w);

CostMatrix build_cost_matrix(const std::vector<Eigen::Vector3d>& points, const CostWeights& w);
CostMatrix build_cost_matrix(const ViewpointSet& vps, const CostWeights& w);

// Total cost of visiting the viewpoints in the given order. Open by
// default (no edge back to the start); closed adds the return edge.
double path_fitness(const std::vector<int>& order, const CostMatrix& cm, bool closed = false);

} // namespace cipp
