#include "cipp/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "cipp/errors.hpp"

namespace cipp {

namespace {

constexpr double kOnPlaneEps = 1e-9;  // vertex-on-plane classification
constexpr double kChainTol = 1e-6;    // endpoint matching when chaining segments

bool lex_less(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.z() < b.z();
}

// Merges nearby 2D endpoints into shared node ids so segments can be
// chained exactly. First occurrence fixes the representative coordinates.
class NodeMap {
public:
    explicit NodeMap(double tol) : tol_(tol), inv_cell_(1.0 / tol) {}

    int id_for(const Eigen::Vector3d& p) {
        const auto cx = static_cast<std::int64_t>(std::floor(p.x() * inv_cell_));
        const auto cy = static_cast<std::int64_t>(std::floor(p.y() * inv_cell_));
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(key(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (int idx : it->second) {
                    const Eigen::Vector3d& q = reps_[idx];
                    if ((p - q).head<2>().norm() <= tol_) return idx;
                }
            }
        }
        const int idx = static_cast<int>(reps_.size());
        reps_.push_back(p);
        cells_[key(cx, cy)].push_back(idx);
        return idx;
    }

    const std::vector<Eigen::Vector3d>& reps() const { return reps_; }

private:
    static std::uint64_t key(std::int64_t cx, std::int64_t cy) {
        return static_cast<std::uint64_t>(cx) * 0x9e3779b97f4a7c15ULL ^
               static_cast<std::uint64_t>(cy);
    }

    double tol_;
    double inv_cell_;
    std::vector<Eigen::Vector3d> reps_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

Eigen::Vector3d cross_point(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double sa,
                            double sb, double level) {
    const double t = sa / (sa - sb);
    Eigen::Vector3d p = a + t * (b - a);
    p.z() = level;
    return p;
}

// One segment per triangle genuinely crossed by the plane. Triangles lying
// in the plane are skipped; their boundary is re-emitted by the adjacent
// wall triangles, and duplicates are removed later anyway.
void triangle_segments(const TriangleMesh& mesh, double level,
                       std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>>& out) {
    for (const auto& tri : mesh.triangles) {
        const Eigen::Vector3d* v[3] = {&mesh.vertices[tri[0]], &mesh.vertices[tri[1]],
                                       &mesh.vertices[tri[2]]};
        double s[3];
        int on_plane = 0;
        for (int i = 0; i < 3; ++i) {
            s[i] = v[i]->z() - level;
            if (std::abs(s[i]) <= kOnPlaneEps) {
                s[i] = 0.0;
                ++on_plane;
            }
        }
        if (on_plane == 3) continue;

        if (on_plane == 2) {
            int a = -1, b = -1;
            for (int i = 0; i < 3; ++i) {
                if (s[i] != 0.0) continue;
                if (a < 0) a = i;
                else b = i;
            }
            Eigen::Vector3d p = *v[a], q = *v[b];
            p.z() = level;
            q.z() = level;
            out.emplace_back(p, q);
            continue;
        }

        if (on_plane == 1) {
            int k = 0;
            while (s[k] != 0.0) ++k;
            const int i = (k + 1) % 3, j = (k + 2) % 3;
            if (s[i] * s[j] < 0.0) {
                Eigen::Vector3d p = *v[k];
                p.z() = level;
                out.emplace_back(p, cross_point(*v[i], *v[j], s[i], s[j], level));
            }
            continue;
        }

        // no vertex on the plane: need vertices on both sides
        int lone = -1;
        if (s[0] * s[1] > 0.0 && s[0] * s[2] > 0.0) continue;
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            if (s[j] * s[k] > 0.0) {
                lone = i;
                break;
            }
        }
        if (lone < 0) continue;
        const int j = (lone + 1) % 3, k = (lone + 2) % 3;
        out.emplace_back(cross_point(*v[lone], *v[j], s[lone], s[j], level),
                         cross_point(*v[lone], *v[k], s[lone], s[k], level));
    }
}

struct Chains {
    std::vector<std::vector<int>> node_paths;
    std::vector<bool> closed;
};

Chains chain_segments(const std::vector<std::pair<int, int>>& edges, int node_count,
                      const std::vector<Eigen::Vector3d>& reps) {
    std::vector<std::vector<std::pair<int, int>>> adj(node_count);  // (neighbor, edge id)
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].first].emplace_back(edges[e].second, e);
        adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end(), [&](const auto& l, const auto& r) {
            if (l.first != r.first) return lex_less(reps[l.first], reps[r.first]);
            return l.second < r.second;
        });
    }

    std::vector<int> order(node_count);
    for (int i = 0; i < node_count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return lex_less(reps[l], reps[r]); });

    std::vector<bool> used(edges.size(), false);
    Chains chains;

    auto next_unused = [&](int node) -> std::pair<int, int> {
        for (const auto& [nbr, e] : adj[node]) {
            if (!used[e]) return {nbr, e};
        }
        return {-1, -1};
    };

    auto walk = [&](int start, int first_nbr, int first_edge) {
        std::vector<int> path{start, first_nbr};
        used[first_edge] = true;
        int current = first_nbr;
        while (current != start && adj[current].size() == 2) {
            auto [nbr, e] = next_unused(current);
            if (e < 0) break;
            used[e] = true;
            path.push_back(nbr);
            current = nbr;
        }
        const bool is_cycle = path.size() > 2 && path.front() == path.back();
        if (is_cycle) path.pop_back();
        chains.node_paths.push_back(std::move(path));
        chains.closed.push_back(is_cycle);
    };

    // open chains first, anchored at nodes that are not simple pass-throughs
    for (int u : order) {
        if (adj[u].size() == 2) continue;
        for (const auto& [nbr, e] : adj[u]) {
            if (!used[e]) walk(u, nbr, e);
        }
    }
    // what remains are pure cycles
    for (int u : order) {
        for (const auto& [nbr, e] : adj[u]) {
            if (!used[e]) walk(u, nbr, e);
        }
    }
    return chains;
}

void canonicalize(SliceContour& c) {
    auto& pts = c.points;
    if (c.closed) {
        double area2 = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            const auto& q = pts[(i + 1) % pts.size()];
            area2 += p.x() * q.y() - q.x() * p.y();
        }
        if (area2 < 0.0) std::reverse(pts.begin(), pts.end());
        auto lowest = std::min_element(pts.begin(), pts.end(), lex_less);
        std::rotate(pts.begin(), lowest, pts.end());
    } else if (!pts.empty() && lex_less(pts.back(), pts.front())) {
        std::reverse(pts.begin(), pts.end());
    }
}

} // namespace

std::vector<double> slice_levels(const TriangleMesh& mesh, const SpacingSpec& spacing,
                                 double footprint_h) {
    if (!(footprint_h > 0.0)) throw ValidationError("footprint height must be positive");
    if (!(spacing.delta_h > 0.0)) throw ValidationError("level spacing must be positive");
    const double zmin = mesh.min_z();
    const double zmax = mesh.max_z();
    const double extent = zmax - zmin;

    if (extent <= footprint_h) return {zmin + extent / 2.0};

    const double start = zmin + footprint_h / 2.0;
    const double end = zmax - footprint_h / 2.0;
    std::vector<double> levels;
    for (int k = 0;; ++k) {
        const double v = start + k * spacing.delta_h;
        if (v > end + 1e-9) break;
        levels.push_back(v);
    }
    if (levels.empty()) levels.push_back(start);
    if (end - levels.back() > 0.25 * spacing.delta_h) levels.push_back(end);
    return levels;
}

std::vector<SliceContour> slice_mesh(const TriangleMesh& mesh, double level) {
    std::vector<std::pair<Eigen::Vector3d, Eigen::Vector3d>> segments;
    triangle_segments(mesh, level, segments);

    NodeMap nodes(kChainTol);
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& [p, q] : segments) {
        const int u = nodes.id_for(p);
        const int v = nodes.id_for(q);
        if (u == v) continue;
        const auto lo = static_cast<std::uint64_t>(std::min(u, v));
        const auto hi = static_cast<std::uint64_t>(std::max(u, v));
        if (!seen.insert((lo << 32) | hi).second) continue;
        edges.emplace_back(u, v);
    }
    if (edges.empty())
        throw PipelineError("empty slice: no contour at level " + std::to_string(level));

    const auto& reps = nodes.reps();
    Chains chains = chain_segments(edges, static_cast<int>(reps.size()), reps);

    std::vector<SliceContour> contours;
    for (std::size_t i = 0; i < chains.node_paths.size(); ++i) {
        const auto& path = chains.node_paths[i];
        if (path.size() < 2) continue;
        SliceContour c;
        c.level = level;
        c.closed = chains.closed[i];
        c.points.reserve(path.size());
        for (int id : path) {
            Eigen::Vector3d p = reps[id];
            p.z() = level;
            c.points.push_back(p);
        }
        canonicalize(c);
        contours.push_back(std::move(c));
    }
    std::sort(contours.begin(), contours.end(), [](const SliceContour& a, const SliceContour& b) {
        return std::lexicographical_compare(a.points.begin(), a.points.end(), b.points.begin(),
                                            b.points.end(),
                                            [](const auto& p, const auto& q) { return lex_less(p, q); });
    });
    return contours;
}

SliceContour resample_contour(const SliceContour& contour, double max_spacing) {
    if (!(max_spacing > 0.0)) throw ValidationError("resample spacing must be positive");
    const auto& pts = contour.points;
    if (pts.size() < 2) return contour;

    SliceContour out;
    out.level = contour.level;
    out.closed = contour.closed;
    out.cluster_id = contour.cluster_id;

    const std::size_t n = pts.size();
    const std::size_t edge_count = contour.closed ? n : n - 1;
    for (std::size_t i = 0; i < edge_count; ++i) {
        const Eigen::Vector3d& a = pts[i];
        const Eigen::Vector3d& b = pts[(i + 1) % n];
        out.points.push_back(a);
        const double len = (b - a).norm();
        const int pieces = std::max(1, static_cast<int>(std::ceil(len / max_spacing - 1e-12)));
        for (int k = 1; k < pieces; ++k) {
            Eigen::Vector3d p = a + (static_cast<double>(k) / pieces) * (b - a);
            p.z() = contour.level;
            out.points.push_back(p);
        }
    }
    if (!contour.closed) out.points.push_back(pts.back());
    return out;
}

double contour_length(const SliceContour& contour) {
    const auto& pts = contour.points;
    if (pts.size() < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += (pts[i + 1] - pts[i]).norm();
    if (contour.closed) total += (pts.front() - pts.back()).norm();
    return total;
}

} // namespace cipp
