#include "cipp/synthetic.hpp"

namespace cipp {

namespace {

void append(TriangleMesh& dst, const TriangleMesh& src) {
    const int base = static_cast<int>(dst.vertices.size());
    dst.vertices.insert(dst.vertices.end(), src.vertices.begin(), src.vertices.end());
    for (const auto& tri : src.triangles)
        dst.triangles.push_back({tri[0] + base, tri[1] + base, tri[2] + base});
}

// Open rectangular tube along y: top, bottom and both x walls, no end
// caps. The open ends butt against the tower walls.
TriangleMesh make_bridge_tube(double x0, double x1, double y0, double y1, double z0, double z1) {
    TriangleMesh m;
    m.vertices = {
        {x0, y0, z0}, {x1, y0, z0}, {x1, y1, z0}, {x0, y1, z0},
        {x0, y0, z1}, {x1, y0, z1}, {x1, y1, z1}, {x0, y1, z1},
    };
    m.triangles = {
        {0, 2, 1}, {0, 3, 2},  // floor, facing down
        {4, 5, 6}, {4, 6, 7},  // roof, facing up
        {0, 4, 7}, {0, 7, 3},  // wall x = x0, facing -x
        {1, 2, 6}, {1, 6, 5},  // wall x = x1, facing +x
    };
    m.update_bounds();
    return m;
}

} // namespace

TriangleMesh make_box(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi) {
    TriangleMesh m;
    m.vertices = {
        {lo.x(), lo.y(), lo.z()}, {hi.x(), lo.y(), lo.z()},
        {hi.x(), hi.y(), lo.z()}, {lo.x(), hi.y(), lo.z()},
        {lo.x(), lo.y(), hi.z()}, {hi.x(), lo.y(), hi.z()},
        {hi.x(), hi.y(), hi.z()}, {lo.x(), hi.y(), hi.z()},
    };
    m.triangles = {
        {0, 2, 1}, {0, 3, 2},  // bottom
        {4, 5, 6}, {4, 6, 7},  // top
        {0, 1, 5}, {0, 5, 4},  // y = lo
        {1, 2, 6}, {1, 6, 5},  // x = hi
        {2, 3, 7}, {2, 7, 6},  // y = hi
        {3, 0, 4}, {3, 4, 7},  // x = lo
    };
    m.update_bounds();
    return m;
}

TriangleMesh make_box_tower() {
    return make_box({0.0, 0.0, 0.0}, {150.0, 210.0, 231.0});
}

TriangleMesh make_twin_bridge() {
    TriangleMesh m = make_box({0.0, 0.0, 0.0}, {80.0, 90.0, 380.0});
    append(m, make_box({0.0, 250.0, 0.0}, {80.0, 340.0, 380.0}));
    append(m, make_bridge_tube(25.0, 55.0, 90.0, 250.0, 160.0, 215.0));
    m.update_bounds();
    return m;
}

} // namespace cipp
