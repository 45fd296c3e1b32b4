#include "cipp/baf.hpp"

#include <algorithm>

#include "cipp/errors.hpp"

namespace cipp {

BafPath baf_path(const ViewpointSet& vps, const CostMatrix& cm) {
    const int m = static_cast<int>(vps.viewpoints.size());
    if (m < 2) throw ValidationError("baf needs at least two viewpoints");
    if (cm.size() != m) throw ValidationError("cost matrix does not match the viewpoint set");

    // viewpoints are stored layer-major in sweep order already; group them
    // into consecutive layer runs
    std::vector<std::pair<int, int>> runs;  // [begin, end)
    int begin = 0;
    for (int i = 1; i <= m; ++i) {
        if (i == m || vps.viewpoints[i].layer != vps.viewpoints[begin].layer) {
            runs.emplace_back(begin, i);
            begin = i;
        }
    }

    BafPath path;
    path.order.reserve(m);
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const auto [lo, hi] = runs[r];
        if (r % 2 == 0) {
            for (int i = lo; i < hi; ++i) path.order.push_back(i);
        } else {
            for (int i = hi - 1; i >= lo; --i) path.order.push_back(i);
        }
    }
    path.fitness = path_fitness(path.order, cm);
    return path;
}

} // namespace cipp
