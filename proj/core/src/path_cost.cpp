#include "cipp/path_cost.hpp"

#include <cmath>

#include "cipp/errors.hpp"

namespace cipp {

CostMatrix::CostMatrix(int size, std::vector<double> values, CostWeights weights)
    : size_(size), values_(std::move(values)), weights_(weights) {
    if (size_ < 0 || values_.size() != static_cast<std::size_t>(size_) * size_)
        throw ValidationError("cost matrix storage does not match its size");
}

double edge_cost(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const CostWeights& w) {
    const double dx = b.x() - a.x();
    const double dy = b.y() - a.y();
    const double dz = b.z() - a.z();
    return w.horizontal * std::hypot(dx, dy) + w.vertical * std::abs(dz);
}

namespace {

void check_weights(const CostWeights& w) {
    if (!(w.horizontal >= 0.0) || !(w.vertical >= 0.0) || !(w.horizontal + w.vertical > 0.0))
        throw ValidationError("cost weights must be nonnegative and not both zero");
}

} // namespace

CostMatrix build_cost_matrix(const std::vector<Eigen::Vector3d>& points, const CostWeights& w) {
    check_weights(w);
    const int m = static_cast<int>(points.size());
    if (m < 2) throw ValidationError("cost matrix needs at least two viewpoints");

    std::vector<double> values(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double c = edge_cost(points[i], points[j], w);
            values[static_cast<std::size_t>(i) * m + j] = c;
            values[static_cast<std::size_t>(j) * m + i] = c;
        }
    }
    return CostMatrix(m, std::move(values), w);
}

CostMatrix build_cost_matrix(const ViewpointSet& vps, const CostWeights& w) {
    std::vector<Eigen::Vector3d> points;
    points.reserve(vps.viewpoints.size());
    for (const auto& vp : vps.viewpoints) points.push_back(vp.position);
    return build_cost_matrix(points, w);
}

double path_fitness(const std::vector<int>& order, const CostMatrix& cm, bool closed) {
    const int m = cm.size();
    if (static_cast<int>(order.size()) != m)
        throw ValidationError("path order length does not match the cost matrix");
    std::vector<char> hit(m, 0);
    for (int idx : order) {
        if (idx < 0 || idx >= m || hit[idx]) throw ValidationError("path order is not a permutation");
        hit[idx] = 1;
    }

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) total += cm(order[i], order[i + 1]);
    if (closed && order.size() > 1) total += cm(order.back(), order.front());
    return total;
}

} // namespace cipp
