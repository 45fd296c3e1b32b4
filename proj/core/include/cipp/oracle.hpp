#pragma once

#include <cstdint>
#include <vector>

#include "cipp/path_cost.hpp"

namespace cipp {

struct OracleResult {
    std::vector<int> best_order;
    double best_fitness = 0.0;
    std::uint64_t paths_evaluated = 0;
};

// Exact optimum by enumerating every Hamiltonian ordering once per
// direction class (a path and its reverse cost the same). Factorial time;
// intended for small instances only.
OracleResult exhaustive_best_path(const CostMatrix& cm, bool closed = false);

} // namespace cipp
