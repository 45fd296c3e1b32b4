#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <string>

#include "cipp/mesh.hpp"

namespace cipp::test {

// Closest-point distance from p to the triangle abc.
double point_triangle_distance(const Eigen::Vector3d& p, const Eigen::Vector3d& a,
                               const Eigen::Vector3d& b, const Eigen::Vector3d& c);

// Distance from p to the nearest point on any triangle of the mesh.
double mesh_distance(const TriangleMesh& mesh, const Eigen::Vector3d& p);

// Twice the signed area of a closed 2D polygon given as xy projections.
double shoelace2(const std::vector<Eigen::Vector3d>& points);

// Scratch directory under the system temp root, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

void write_text(const std::filesystem::path& file, const std::string& content);
std::string read_text(const std::filesystem::path& file);

} // namespace cipp::test
