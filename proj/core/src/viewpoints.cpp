#include "cipp/viewpoints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "cipp/clustering.hpp"
#include "cipp/errors.hpp"

namespace cipp {

namespace {

Eigen::Vector2d edge_normal(const Eigen::Vector2d& from, const Eigen::Vector2d& to) {
    const Eigen::Vector2d dir = (to - from).normalized();
    return {dir.y(), -dir.x()};  // right of travel
}

// Area centroid of a closed 2D polygon. Returns false for degenerate
// (near zero area) rings.
bool area_centroid(const std::vector<Eigen::Vector3d>& pts, Eigen::Vector2d& out) {
    double area2 = 0.0;
    Eigen::Vector2d acc = Eigen::Vector2d::Zero();
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::Vector2d p = pts[i].head<2>();
        const Eigen::Vector2d q = pts[(i + 1) % n].head<2>();
        const double cross = p.x() * q.y() - q.x() * p.y();
        area2 += cross;
        acc += (p + q) * cross;
    }
    if (std::abs(area2) < 1e-9) return false;
    out = acc / (3.0 * area2);
    return true;
}

bool is_collinear(const std::vector<Eigen::Vector3d>& pts) {
    const Eigen::Vector2d a = pts.front().head<2>();
    const Eigen::Vector2d b = pts.back().head<2>();
    Eigen::Vector2d dir = b - a;
    const double len = dir.norm();
    if (len < 1e-12) return true;
    dir /= len;
    for (const auto& p : pts) {
        const Eigen::Vector2d v = p.head<2>() - a;
        if (std::abs(dir.x() * v.y() - dir.y() * v.x()) > 1e-9) return false;
    }
    return true;
}

} // namespace

std::vector<Viewpoint> offset_contour(const SliceContour& contour, double d,
                                      const std::optional<Eigen::Vector2d>& outward_reference) {
    const auto& pts = contour.points;
    if (pts.size() < 2) throw ValidationError("offset_contour requires at least two points");
    if (!(d > 0.0)) throw ValidationError("working distance must be positive");

    const std::size_t n = pts.size();
    const std::size_t edge_count = contour.closed ? n : n - 1;
    std::vector<Eigen::Vector2d> edge_n(edge_count);
    for (std::size_t i = 0; i < edge_count; ++i)
        edge_n[i] = edge_normal(pts[i].head<2>(), pts[(i + 1) % n].head<2>());

    std::vector<Eigen::Vector2d> point_n(n);
    for (std::size_t i = 0; i < n; ++i) {
        Eigen::Vector2d sum;
        if (contour.closed) {
            sum = edge_n[(i + edge_count - 1) % edge_count] + edge_n[i % edge_count];
        } else if (i == 0) {
            sum = edge_n.front();
        } else if (i == n - 1) {
            sum = edge_n.back();
        } else {
            sum = edge_n[i - 1] + edge_n[i];
        }
        const double len = sum.norm();
        // a spike folds the two edge normals onto each other; fall back to
        // one of them rather than dividing by zero
        point_n[i] = len > 1e-12 ? Eigen::Vector2d(sum / len)
                                 : edge_n[std::min(i, edge_count - 1)];
    }

    // pick the outward side for the whole contour at once
    Eigen::Vector2d reference;
    if (contour.closed) {
        if (!area_centroid(pts, reference))
            throw ValidationError("degenerate contour: closed ring with no area");
    } else if (outward_reference) {
        reference = *outward_reference;
    } else if (!is_collinear(pts)) {
        reference = Eigen::Vector2d::Zero();
        for (const auto& p : pts) reference += p.head<2>();
        reference /= static_cast<double>(n);
    } else {
        throw ValidationError("degenerate contour: straight open run needs an outward reference");
    }

    double side = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        side += point_n[i].dot(pts[i].head<2>() - reference);
    if (side < 0.0)
        for (auto& v : point_n) v = -v;

    std::vector<Viewpoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::Vector3d normal(point_n[i].x(), point_n[i].y(), 0.0);
        Viewpoint vp;
        vp.position = pts[i] + d * normal;
        vp.heading = -normal;
        vp.layer = 0;
        vp.cluster = contour.cluster_id;
        out.push_back(vp);
    }
    return out;
}

std::vector<Viewpoint> downsample_arc_walk(const std::vector<Viewpoint>& ring, bool closed,
                                           double step) {
    (void)closed;  // the closing gap is implicit: the walk never wraps past the start
    if (!(step > 0.0)) throw ValidationError("downsampling step must be positive");
    if (ring.empty()) return {};

    std::vector<Viewpoint> kept;
    kept.push_back(ring.front());
    double arc = 0.0, last_kept_arc = 0.0;
    for (std::size_t i = 1; i < ring.size(); ++i) {
        arc += (ring[i].position - ring[i - 1].position).norm();
        if (arc - last_kept_arc >= step) {
            kept.push_back(ring[i]);
            last_kept_arc = arc;
        }
    }
    return kept;
}

ViewpointSet build_viewpoint_set(const TriangleMesh& mesh, const FormationSpec& fs,
                                 const SpacingSpec& spacing, double d, double dbscan_eps,
                                 int dbscan_min_pts, double resample_spacing) {
    if (!(d > 0.0)) throw ValidationError("working distance must be positive");
    if (!(spacing.delta_w > 0.0) || !(spacing.delta_h > 0.0))
        throw ValidationError("viewpoint spacing must be positive");
    if (resample_spacing <= 0.0) resample_spacing = spacing.delta_w / 8.0;

    const std::vector<double> levels = slice_levels(mesh, spacing, fs.footprint_h);

    ViewpointSet out;
    out.spacing = spacing;

    for (int layer = 0; layer < static_cast<int>(levels.size()); ++layer) {
        std::vector<SliceContour> contours;
        try {
            contours = slice_mesh(mesh, levels[layer]);
        } catch (const PipelineError&) {
            continue;  // plane misses the structure at this height
        }
        for (auto& c : contours) c = resample_contour(c, resample_spacing);
        contours = cluster_contours(std::move(contours), dbscan_eps, dbscan_min_pts);

        std::map<int, Eigen::Vector2d> centroid_sum;
        std::map<int, int> centroid_count;
        for (const auto& c : contours) {
            auto& acc = centroid_sum.try_emplace(c.cluster_id, Eigen::Vector2d::Zero()).first->second;
            for (const auto& p : c.points) acc += p.head<2>();
            centroid_count[c.cluster_id] += static_cast<int>(c.points.size());
        }

        std::map<int, std::vector<const SliceContour*>> by_cluster;
        for (const auto& c : contours) by_cluster[c.cluster_id].push_back(&c);

        for (const auto& [cluster, members] : by_cluster) {
            const Eigen::Vector2d hint = centroid_sum[cluster] / centroid_count[cluster];
            std::vector<Viewpoint> cluster_kept;
            for (const SliceContour* c : members) {
                auto walked = downsample_arc_walk(offset_contour(*c, d, hint), c->closed,
                                                  spacing.delta_w);
                for (auto& vp : walked) {
                    vp.layer = layer;
                    bool crowded = false;
                    for (const auto& prev : cluster_kept) {
                        if ((prev.position - vp.position).norm() < 0.5 * spacing.delta_w) {
                            crowded = true;
                            break;
                        }
                    }
                    if (!crowded) cluster_kept.push_back(vp);
                }
            }
            out.viewpoints.insert(out.viewpoints.end(), cluster_kept.begin(), cluster_kept.end());
        }
    }

    if (out.viewpoints.empty())
        throw PipelineError("no viewpoints: every slice level came up empty");

    out.bbox_min = mesh.bbox_min;
    out.bbox_max = mesh.bbox_max;
    return out;
}

} // namespace cipp
