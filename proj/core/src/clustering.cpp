#include "cipp/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "cipp/errors.hpp"

namespace cipp {

std::vector<int> dbscan_labels(const std::vector<Eigen::Vector2d>& points, double eps,
                               int min_pts) {
    if (!(eps > 0.0)) throw ValidationError("dbscan eps must be positive");
    if (min_pts < 1) throw ValidationError("dbscan min_pts must be at least 1");

    const int n = static_cast<int>(points.size());
    const double eps2 = eps * eps;
    std::vector<int> labels(n, -1);
    std::vector<char> visited(n, 0);

    auto neighbours = [&](int i, std::vector<int>& out) {
        out.clear();
        for (int j = 0; j < n; ++j) {
            if ((points[j] - points[i]).squaredNorm() <= eps2) out.push_back(j);
        }
    };

    std::vector<int> seed, reach;
    int next_label = 0;
    for (int i = 0; i < n; ++i) {
        if (visited[i]) continue;
        visited[i] = 1;
        neighbours(i, seed);
        if (static_cast<int>(seed.size()) < min_pts) continue;  // noise unless claimed later

        const int label = next_label++;
        labels[i] = label;
        std::queue<int> frontier;
        for (int j : seed) frontier.push(j);
        while (!frontier.empty()) {
            const int j = frontier.front();
            frontier.pop();
            if (labels[j] < 0) labels[j] = label;
            if (visited[j]) continue;
            visited[j] = 1;
            neighbours(j, reach);
            if (static_cast<int>(reach.size()) >= min_pts) {
                for (int k : reach) frontier.push(k);
            }
        }
    }
    return labels;
}

std::vector<SliceContour> cluster_contours(std::vector<SliceContour> contours, double eps,
                                           int min_pts) {
    if (contours.empty()) throw ValidationError("cluster_contours requires contours");

    std::vector<Eigen::Vector2d> flat;
    std::vector<int> owner;
    for (int c = 0; c < static_cast<int>(contours.size()); ++c) {
        for (const auto& p : contours[c].points) {
            flat.push_back(p.head<2>());
            owner.push_back(c);
        }
    }

    std::vector<int> labels = dbscan_labels(flat, eps, min_pts);
    const bool any_cluster = std::any_of(labels.begin(), labels.end(), [](int l) { return l >= 0; });

    if (!any_cluster) {
        // pathological input (all noise): keep contours apart
        for (int c = 0; c < static_cast<int>(contours.size()); ++c) contours[c].cluster_id = c;
        return contours;
    }

    for (std::size_t i = 0; i < flat.size(); ++i) {
        if (labels[i] >= 0) continue;
        double best = std::numeric_limits<double>::infinity();
        int best_label = 0;
        for (std::size_t j = 0; j < flat.size(); ++j) {
            if (labels[j] < 0) continue;
            const double d2 = (flat[j] - flat[i]).squaredNorm();
            if (d2 < best) {
                best = d2;
                best_label = labels[j];
            }
        }
        labels[i] = best_label;
    }

    // majority vote per contour, ties to the smaller label
    std::vector<int> contour_label(contours.size(), 0);
    for (int c = 0; c < static_cast<int>(contours.size()); ++c) {
        std::map<int, int> votes;
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (owner[i] == c) ++votes[labels[i]];
        }
        int best_label = 0, best_count = -1;
        for (const auto& [label, count] : votes) {
            if (count > best_count) {
                best_count = count;
                best_label = label;
            }
        }
        contour_label[c] = best_label;
    }

    std::map<int, int> renumber;
    for (int c = 0; c < static_cast<int>(contours.size()); ++c) {
        const auto it = renumber.try_emplace(contour_label[c], static_cast<int>(renumber.size())).first;
        contours[c].cluster_id = it->second;
    }
    return contours;
}

} // namespace cipp
