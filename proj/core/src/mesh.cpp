#include "cipp/mesh.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "cipp/errors.hpp"

namespace cipp {

namespace {

// Spatial hash for weld lookups; probes the 27 neighboring cells so pairs
// straddling a cell boundary are still found.
struct WeldGrid {
    double cell;
    std::unordered_multimap<std::uint64_t, int> bins;

    explicit WeldGrid(double cell_size) : cell(cell_size) {}

    static std::uint64_t key(std::int64_t x, std::int64_t y, std::int64_t z) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : {x, y, z}) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }

    std::array<std::int64_t, 3> cell_of(const Eigen::Vector3d& p) const {
        return {static_cast<std::int64_t>(std::floor(p.x() / cell)),
                static_cast<std::int64_t>(std::floor(p.y() / cell)),
                static_cast<std::int64_t>(std::floor(p.z() / cell))};
    }

    int find(const Eigen::Vector3d& p, const std::vector<Eigen::Vector3d>& verts, double tol) const {
        const auto c = cell_of(p);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                for (std::int64_t dz = -1; dz <= 1; ++dz) {
                    auto range = bins.equal_range(key(c[0] + dx, c[1] + dy, c[2] + dz));
                    for (auto it = range.first; it != range.second; ++it) {
                        if ((verts[it->second] - p).norm() <= tol) return it->second;
                    }
                }
        return -1;
    }

    void insert(const Eigen::Vector3d& p, int index) {
        const auto c = cell_of(p);
        bins.emplace(key(c[0], c[1], c[2]), index);
    }
};

} // namespace

void TriangleMesh::update_bounds() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    bbox_min = {inf, inf, inf};
    bbox_max = {-inf, -inf, -inf};
    for (const auto& tri : triangles) {
        for (int idx : tri) {
            bbox_min = bbox_min.cwiseMin(vertices[idx]);
            bbox_max = bbox_max.cwiseMax(vertices[idx]);
        }
    }
    if (triangles.empty()) {
        bbox_min.setZero();
        bbox_max.setZero();
    }
}

void TriangleMesh::scale(double factor) {
    for (auto& v : vertices) v *= factor;
    update_bounds();
}

double triangle_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
    return 0.5 * (b - a).cross(c - a).norm();
}

TriangleMesh preprocess(const TriangleMesh& mesh, double weld_tol, double min_area) {
    TriangleMesh out;
    std::vector<int> remap(mesh.vertices.size(), -1);
    WeldGrid grid(std::max(weld_tol, 1e-12) * 2.0);

    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& p = mesh.vertices[i];
        int found = grid.find(p, out.vertices, weld_tol);
        if (found < 0) {
            found = static_cast<int>(out.vertices.size());
            out.vertices.push_back(p);
            grid.insert(p, found);
        }
        remap[i] = found;
    }

    // drop degenerate and duplicate triangles (same vertex set, any winding)
    std::unordered_map<std::uint64_t, std::vector<std::array<int, 3>>> seen;
    auto tri_key = [](std::array<int, 3> t) {
        std::sort(t.begin(), t.end());
        std::uint64_t h = 1469598103934665603ull;
        for (int v : t) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    };

    for (const auto& tri : mesh.triangles) {
        std::array<int, 3> t = {remap[tri[0]], remap[tri[1]], remap[tri[2]]};
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
        if (triangle_area(out.vertices[t[0]], out.vertices[t[1]], out.vertices[t[2]]) < min_area) continue;
        std::array<int, 3> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        auto& bucket = seen[tri_key(t)];
        bool dup = false;
        for (const auto& s : bucket) {
            if (s == sorted) { dup = true; break; }
        }
        if (dup) continue;
        bucket.push_back(sorted);
        out.triangles.push_back(t);
    }

    if (out.triangles.empty())
        throw ValidationError("empty mesh: no triangles survived preprocessing");

    // compact vertices to the referenced set
    std::vector<int> compact(out.vertices.size(), -1);
    std::vector<Eigen::Vector3d> packed;
    for (auto& tri : out.triangles) {
        for (int& idx : tri) {
            if (compact[idx] < 0) {
                compact[idx] = static_cast<int>(packed.size());
                packed.push_back(out.vertices[idx]);
            }
            idx = compact[idx];
        }
    }
    out.vertices = std::move(packed);
    out.update_bounds();
    return out;
}

void validate_mesh(const TriangleMesh& mesh, double min_area) {
    const int n = static_cast<int>(mesh.vertices.size());
    for (const auto& v : mesh.vertices) {
        if (!v.allFinite()) throw ValidationError("mesh vertex has non-finite coordinates");
    }
    for (const auto& tri : mesh.triangles) {
        for (int idx : tri) {
            if (idx < 0 || idx >= n) throw ValidationError("triangle index out of range");
        }
        if (triangle_area(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]) < min_area)
            throw ValidationError("degenerate triangle below area tolerance");
    }
    TriangleMesh probe = mesh;
    probe.update_bounds();
    if (!probe.bbox_min.isApprox(mesh.bbox_min) || !probe.bbox_max.isApprox(mesh.bbox_max))
        throw ValidationError("mesh bbox is stale");
}

} // namespace cipp
