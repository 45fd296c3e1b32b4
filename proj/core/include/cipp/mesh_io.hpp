#pragma once

#include <filesystem>

#include "cipp/mesh.hpp"

namespace cipp {

enum class MeshFormat { StlBinary, StlAscii, PlyAscii, Auto };

// Loads a structure model and runs the standard cleanup pass (weld + degenerate
// removal). Auto detection looks at the extension and file contents; files that
// start with "solid" but fail the ASCII grammar are retried as binary STL.
//
// Throws IoError for missing or malformed files, ValidationError when no
// triangles survive cleanup.
TriangleMesh load_mesh(const std::filesystem::path& path, MeshFormat format = MeshFormat::Auto,
                       double weld_tol = 1e-6);

void save_stl_binary(const TriangleMesh& mesh, const std::filesystem::path& path);

} // namespace cipp
