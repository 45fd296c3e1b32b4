#include "cipp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cipp/errors.hpp"

namespace cipp {

OracleResult exhaustive_best_path(const CostMatrix& cm, bool closed) {
    const int m = cm.size();
    OracleResult result;
    if (m <= 0) throw ValidationError("oracle needs a non-empty cost matrix");
    if (m == 1) {
        result.best_order = {0};
        result.paths_evaluated = 1;
        return result;
    }

    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);

    result.best_fitness = std::numeric_limits<double>::infinity();
    do {
        // count each undirected route once: open paths by requiring
        // first < last, tours by pinning the start and one direction
        if (closed) {
            if (perm[0] != 0) break;  // permutations are lexicographic; all later ones start != 0
            if (m > 2 && perm[1] > perm[m - 1]) continue;
        } else {
            if (perm[0] > perm[m - 1]) continue;
        }

        double fitness = 0.0;
        for (int i = 0; i + 1 < m; ++i) fitness += cm(perm[i], perm[i + 1]);
        if (closed) fitness += cm(perm[m - 1], perm[0]);

        ++result.paths_evaluated;
        if (fitness < result.best_fitness) {
            result.best_fitness = fitness;
            result.best_order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return result;
}

} // namespace cipp
