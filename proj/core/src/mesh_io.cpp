#include "cipp/mesh_io.hpp"

#include <Eigen/Geometry>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cipp/errors.hpp"

namespace cipp {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        throw IoError("file not found: " + path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

float read_f32_le(const char* p) {
    std::uint32_t bits = 0;
    std::memcpy(&bits, p, 4);
    float f = 0.0f;
    std::memcpy(&f, &bits, 4);
    return f;
}

void append_facet(TriangleMesh& mesh, const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                  const Eigen::Vector3d& c) {
    const int base = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back(a);
    mesh.vertices.push_back(b);
    mesh.vertices.push_back(c);
    mesh.triangles.push_back({base, base + 1, base + 2});
}

TriangleMesh parse_stl_binary(const std::string& data, const std::string& name) {
    if (data.size() < 84) throw IoError("malformed binary STL (truncated header): " + name);
    std::uint32_t count = 0;
    std::memcpy(&count, data.data() + 80, 4);
    const std::size_t expected = 84 + static_cast<std::size_t>(count) * 50;
    if (data.size() < expected)
        throw IoError("malformed binary STL (bad facet count): " + name);

    TriangleMesh mesh;
    const char* p = data.data() + 84;
    for (std::uint32_t i = 0; i < count; ++i, p += 50) {
        // 12 float32: normal then three vertices; trailing uint16 attribute ignored
        Eigen::Vector3d v[3];
        for (int k = 0; k < 3; ++k) {
            const char* q = p + 12 + k * 12;
            v[k] = {read_f32_le(q), read_f32_le(q + 4), read_f32_le(q + 8)};
        }
        append_facet(mesh, v[0], v[1], v[2]);
    }
    return mesh;
}

class TokenStream {
public:
    explicit TokenStream(const std::string& data) : in_(data) {}

    std::optional<std::string> next() {
        std::string tok;
        if (in_ >> tok) return tok;
        return std::nullopt;
    }

    std::string expect_any() {
        auto tok = next();
        if (!tok) throw IoError("malformed ASCII STL: unexpected end of file");
        return *tok;
    }

    void expect(const std::string& word) {
        auto tok = expect_any();
        if (tok != word)
            throw IoError("malformed ASCII STL: expected '" + word + "', got '" + tok + "'");
    }

    double number() {
        auto tok = expect_any();
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw IoError("malformed ASCII STL: bad number '" + tok + "'");
        }
    }

private:
    std::istringstream in_;
};

TriangleMesh parse_stl_ascii(const std::string& data, const std::string& name) {
    TokenStream ts(data);
    auto first = ts.next();
    if (!first || *first != "solid") throw IoError("malformed ASCII STL (missing 'solid'): " + name);

    TriangleMesh mesh;
    // optional solid name: scan forward to the first keyword
    std::string tok = ts.expect_any();
    while (tok != "facet" && tok != "endsolid") tok = ts.expect_any();

    while (tok == "facet") {
        ts.expect("normal");
        ts.number();
        ts.number();
        ts.number();
        ts.expect("outer");
        ts.expect("loop");
        Eigen::Vector3d v[3];
        for (auto& p : v) {
            ts.expect("vertex");
            p.x() = ts.number();
            p.y() = ts.number();
            p.z() = ts.number();
        }
        ts.expect("endloop");
        ts.expect("endfacet");
        append_facet(mesh, v[0], v[1], v[2]);
        tok = ts.expect_any();
    }
    if (tok != "endsolid") throw IoError("malformed ASCII STL: expected 'endsolid', got '" + tok + "'");
    return mesh;
}

TriangleMesh parse_ply_ascii(const std::string& data, const std::string& name) {
    std::istringstream in(data);
    std::string line;
    auto next_line = [&]() {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.rfind("comment", 0) == 0) continue;
            return true;
        }
        return false;
    };

    if (!next_line() || line != "ply") throw IoError("malformed PLY (missing magic): " + name);
    if (!next_line() || line.rfind("format ascii", 0) != 0)
        throw IoError("unsupported PLY format (ASCII only): " + name);

    long vertex_count = -1, face_count = -1;
    int vertex_props = 0;
    int ix = -1, iy = -1, iz = -1;
    std::string current_element;
    while (next_line() && line != "end_header") {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "element") {
            long n = 0;
            ls >> current_element >> n;
            if (current_element == "vertex") vertex_count = n;
            else if (current_element == "face") face_count = n;
        } else if (word == "property" && current_element == "vertex") {
            std::string type, prop;
            ls >> type >> prop;
            if (type == "list") throw IoError("malformed PLY (list property on vertex): " + name);
            if (prop == "x") ix = vertex_props;
            if (prop == "y") iy = vertex_props;
            if (prop == "z") iz = vertex_props;
            ++vertex_props;
        }
    }
    if (line != "end_header") throw IoError("malformed PLY (no end_header): " + name);
    if (vertex_count < 0 || face_count < 0 || ix < 0 || iy < 0 || iz < 0)
        throw IoError("malformed PLY (missing vertex/face elements): " + name);

    TriangleMesh mesh;
    mesh.vertices.reserve(vertex_count);
    for (long i = 0; i < vertex_count; ++i) {
        if (!next_line()) throw IoError("malformed PLY (truncated vertices): " + name);
        std::istringstream ls(line);
        std::vector<double> vals(vertex_props, 0.0);
        for (int k = 0; k < vertex_props; ++k) {
            if (!(ls >> vals[k])) throw IoError("malformed PLY (bad vertex line): " + name);
        }
        mesh.vertices.push_back({vals[ix], vals[iy], vals[iz]});
    }
    for (long i = 0; i < face_count; ++i) {
        if (!next_line()) throw IoError("malformed PLY (truncated faces): " + name);
        std::istringstream ls(line);
        int arity = 0;
        if (!(ls >> arity)) throw IoError("malformed PLY (bad face line): " + name);
        if (arity != 3) throw IoError("malformed PLY (non-triangle face): " + name);
        std::array<int, 3> tri{};
        for (int& idx : tri) {
            if (!(ls >> idx) || idx < 0 || idx >= vertex_count)
                throw IoError("malformed PLY (face index out of range): " + name);
        }
        mesh.triangles.push_back(tri);
    }
    return mesh;
}

bool looks_like_ply(const std::string& data) {
    return data.rfind("ply", 0) == 0;
}

bool starts_with_solid(const std::string& data) {
    std::size_t i = 0;
    while (i < data.size() && std::isspace(static_cast<unsigned char>(data[i]))) ++i;
    return data.compare(i, 5, "solid") == 0;
}

} // namespace

TriangleMesh load_mesh(const std::filesystem::path& path, MeshFormat format, double weld_tol) {
    const std::string data = read_file(path);
    const std::string name = path.string();

    TriangleMesh raw;
    switch (format) {
    case MeshFormat::StlBinary:
        raw = parse_stl_binary(data, name);
        break;
    case MeshFormat::StlAscii:
        raw = parse_stl_ascii(data, name);
        break;
    case MeshFormat::PlyAscii:
        raw = parse_ply_ascii(data, name);
        break;
    case MeshFormat::Auto: {
        const auto ext = path.extension().string();
        if (ext == ".ply" || looks_like_ply(data)) {
            raw = parse_ply_ascii(data, name);
        } else if (starts_with_solid(data)) {
            // some exporters write binary STL with a "solid" header
            try {
                raw = parse_stl_ascii(data, name);
            } catch (const IoError&) {
                raw = parse_stl_binary(data, name);
            }
        } else {
            raw = parse_stl_binary(data, name);
        }
        break;
    }
    }

    if (raw.triangles.empty())
        throw ValidationError("empty mesh: " + name + " contains no triangles");
    return preprocess(raw, weld_tol);
}

void save_stl_binary(const TriangleMesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write: " + path.string());

    char header[80] = {};
    std::snprintf(header, sizeof(header), "cipp mesh export");
    out.write(header, 80);
    const std::uint32_t count = static_cast<std::uint32_t>(mesh.triangles.size());
    out.write(reinterpret_cast<const char*>(&count), 4);

    for (const auto& tri : mesh.triangles) {
        const Eigen::Vector3d& a = mesh.vertices[tri[0]];
        const Eigen::Vector3d& b = mesh.vertices[tri[1]];
        const Eigen::Vector3d& c = mesh.vertices[tri[2]];
        Eigen::Vector3d n = (b - a).cross(c - a);
        const double len = n.norm();
        if (len > 0) n /= len;

        float rec[12] = {
            static_cast<float>(n.x()), static_cast<float>(n.y()), static_cast<float>(n.z()),
            static_cast<float>(a.x()), static_cast<float>(a.y()), static_cast<float>(a.z()),
            static_cast<float>(b.x()), static_cast<float>(b.y()), static_cast<float>(b.z()),
            static_cast<float>(c.x()), static_cast<float>(c.y()), static_cast<float>(c.z()),
        };
        out.write(reinterpret_cast<const char*>(rec), 48);
        const std::uint16_t attr = 0;
        out.write(reinterpret_cast<const char*>(&attr), 2);
    }
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace cipp
