#include <doctest.h>

#include <fstream>
#include <string>

#include "cipp/errors.hpp"
#include "cipp/mesh.hpp"
#include "cipp/mesh_io.hpp"
#include "cipp/synthetic.hpp"
#include "support.hpp"

namespace {

using cipp::test::TempDir;
using cipp::test::write_text;

const char* kAsciiWedge = R"(solid wedge
  facet normal 0 0 -1
    outer loop
      vertex 0 0 0
      vertex 0 1 0
      vertex 1 0 0
    endloop
  endfacet
  facet normal 0 -1 0
    outer loop
      vertex 0 0 0
      vertex 1 0 0
      vertex 0 0 1
    endloop
  endfacet
endsolid wedge
)";

const char* kPlyQuad = R"(ply
format ascii 1.0
comment unit square split in two
element vertex 4
property float x
property float y
property float z
element face 2
property list uchar int vertex_indices
end_header
0 0 0
1 0 0
1 1 0
0 1 0
3 0 1 2
3 0 2 3
)";

} // namespace

TEST_SUITE("mesh_io") {

TEST_CASE("binary STL round trip welds shared corners") {
    TempDir dir;
    const auto mesh = cipp::make_box({0.0, 0.0, 0.0}, {2.0, 3.0, 4.0});
    const auto file = dir.file("box.stl");
    cipp::save_stl_binary(mesh, file);

    const auto loaded = cipp::load_mesh(file);
    CHECK(loaded.vertices.size() == 8);
    CHECK(loaded.triangles.size() == 12);
    CHECK(loaded.bbox_min.isApprox(Eigen::Vector3d(0.0, 0.0, 0.0)));
    CHECK(loaded.bbox_max.isApprox(Eigen::Vector3d(2.0, 3.0, 4.0)));
}

TEST_CASE("ascii STL is parsed and welded") {
    TempDir dir;
    const auto file = dir.file("wedge.stl");
    write_text(file, kAsciiWedge);

    const auto mesh = cipp::load_mesh(file);
    CHECK(mesh.triangles.size() == 2);
    CHECK(mesh.vertices.size() == 4);  // six stored corners, two shared
}

TEST_CASE("format detection works without a file extension") {
    TempDir dir;
    const auto file = dir.file("wedge_no_ext");
    write_text(file, kAsciiWedge);
    CHECK(cipp::load_mesh(file).triangles.size() == 2);
}

TEST_CASE("binary STL whose header begins with solid still loads") {
    TempDir dir;
    const auto mesh = cipp::make_box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
    const auto file = dir.file("tricky.stl");
    cipp::save_stl_binary(mesh, file);

    // overwrite the comment header with the ascii magic word
    auto bytes = cipp::test::read_text(file);
    const std::string magic = "solid misleading";
    bytes.replace(0, magic.size(), magic);
    std::ofstream(file, std::ios::binary) << bytes;

    CHECK(cipp::load_mesh(file).triangles.size() == 12);
}

TEST_CASE("ascii PLY faces arrive intact") {
    TempDir dir;
    const auto file = dir.file("quad.ply");
    write_text(file, kPlyQuad);

    const auto mesh = cipp::load_mesh(file);
    CHECK(mesh.vertices.size() == 4);
    CHECK(mesh.triangles.size() == 2);
    CHECK(mesh.bbox_max.isApprox(Eigen::Vector3d(1.0, 1.0, 0.0)));
}

TEST_CASE("missing file raises an io error") {
    CHECK_THROWS_AS(cipp::load_mesh("/nonexistent/no_such_mesh.stl"), cipp::IoError);
}

TEST_CASE("truncated binary STL raises an io error") {
    TempDir dir;
    const auto file = dir.file("short.stl");
    std::ofstream(file, std::ios::binary) << "not even a header";
    CHECK_THROWS_AS(cipp::load_mesh(file, cipp::MeshFormat::StlBinary), cipp::IoError);
}

TEST_CASE("binary STL with a wrong facet count raises an io error") {
    TempDir dir;
    const auto mesh = cipp::make_box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
    const auto file = dir.file("box.stl");
    cipp::save_stl_binary(mesh, file);

    auto bytes = cipp::test::read_text(file);
    bytes.resize(bytes.size() - 10);
    std::ofstream(file, std::ios::binary) << bytes;
    CHECK_THROWS_AS(cipp::load_mesh(file, cipp::MeshFormat::StlBinary), cipp::IoError);
}

TEST_CASE("malformed ascii STL raises an io error") {
    TempDir dir;
    const auto file = dir.file("broken.stl");
    write_text(file, "solid broken\n  facet normal 0 0 1\n  vertex oops\n");
    CHECK_THROWS_AS(cipp::load_mesh(file, cipp::MeshFormat::StlAscii), cipp::IoError);
}

TEST_CASE("PLY with a quad face raises an io error") {
    TempDir dir;
    const auto file = dir.file("quad_face.ply");
    std::string text = kPlyQuad;
    const auto pos = text.find("3 0 1 2");
    text.replace(pos, 7, "4 0 1 2");
    write_text(file, text);
    CHECK_THROWS_AS(cipp::load_mesh(file), cipp::IoError);
}

TEST_CASE("empty solid raises a validation error") {
    TempDir dir;
    const auto file = dir.file("empty.stl");
    write_text(file, "solid nothing\nendsolid nothing\n");
    CHECK_THROWS_AS(cipp::load_mesh(file), cipp::ValidationError);
}

TEST_CASE("degenerate triangles are dropped by preprocessing") {
    cipp::TriangleMesh mesh;
    mesh.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {2.0, 0.0, 0.0}};
    // second triangle is a zero-area sliver along the x axis
    mesh.triangles = {{0, 1, 2}, {0, 1, 3}};
    const auto clean = cipp::preprocess(mesh);
    CHECK(clean.triangles.size() == 1);
}

TEST_CASE("near-coincident vertices weld into one") {
    cipp::TriangleMesh mesh;
    mesh.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0},
                     {1.0 + 1e-8, 0.0, 0.0}, {1.0, 1.0, 0.0}};
    mesh.triangles = {{0, 1, 2}, {3, 4, 2}};
    const auto clean = cipp::preprocess(mesh);
    CHECK(clean.vertices.size() == 4);
    CHECK(clean.triangles.size() == 2);
}

}
