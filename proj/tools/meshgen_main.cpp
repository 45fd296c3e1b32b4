#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cipp/errors.hpp"
#include "cipp/mesh_io.hpp"
#include "cipp/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generate synthetic inspection structures as binary STL"};

    std::string shape;
    std::string out_path;
    std::vector<double> size{150.0, 210.0, 231.0};

    app.add_option("shape", shape, "one of: box-tower, twin-bridge, box")
        ->required()
        ->check(CLI::IsMember({"box-tower", "twin-bridge", "box"}));
    app.add_option("output", out_path, "destination STL file")->required();
    app.add_option("--size", size, "box dimensions (x y z), box shape only")
        ->expected(3)
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        cipp::TriangleMesh mesh;
        if (shape == "box-tower") {
            mesh = cipp::make_box_tower();
        } else if (shape == "twin-bridge") {
            mesh = cipp::make_twin_bridge();
        } else {
            mesh = cipp::make_box({0.0, 0.0, 0.0}, {size[0], size[1], size[2]});
            mesh.update_bounds();
        }
        cipp::save_stl_binary(mesh, out_path);
        std::cout << "wrote " << mesh.triangles.size() << " triangles to " << out_path << "\n";
    } catch (const cipp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    }
    return 0;
}
