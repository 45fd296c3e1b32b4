#include "support.hpp"

#include <atomic>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cipp::test {

// Ericson, "Real-Time Collision Detection", closest point on triangle.
double point_triangle_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
    const Eigen::Vector3d ab = b - a;
    const Eigen::Vector3d ac = c - a;
    const Eigen::Vector3d ap = p - a;

    const double d1 = ab.dot(ap);
    const double d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return (p - a).norm();

    const Eigen::Vector3d bp = p - b;
    const double d3 = ab.dot(bp);
    const double d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return (p - b).norm();

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return (p - (a + v * ab)).norm();
    }

    const Eigen::Vector3d cp = p - c;
    const double d5 = ab.dot(cp);
    const double d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return (p - c).norm();

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return (p - (a + w * ac)).norm();
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return (p - (b + w * (c - b))).norm();
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom;
    const double w = vc * denom;
    return (p - (a + ab * v + ac * w)).norm();
}

double mesh_distance(const TriangleMesh& mesh, const Eigen::Vector3d& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& tri : mesh.triangles) {
        best = std::min(best, point_triangle_distance(p, mesh.vertices[tri[0]],
                                                      mesh.vertices[tri[1]],
                                                      mesh.vertices[tri[2]]));
    }
    return best;
}

double shoelace2(const std::vector<Eigen::Vector3d>& points) {
    double acc = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        const auto& q = points[(i + 1) % points.size()];
        acc += p.x() * q.y() - q.x() * p.y();
    }
    return acc;
}

TempDir::TempDir() {
    static std::atomic<unsigned> counter{0};
    std::random_device rd;
    const auto tag = std::to_string(rd()) + "_" + std::to_string(counter++);
    path_ = std::filesystem::temp_directory_path() / ("cipp_test_" + tag);
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& file, const std::string& content) {
    std::ofstream out(file);
    out << content;
    if (!out) throw std::runtime_error("test fixture write failed: " + file.string());
}

std::string read_text(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in && !in.eof()) throw std::runtime_error("test fixture read failed: " + file.string());
    return ss.str();
}

} // namespace cipp::test
