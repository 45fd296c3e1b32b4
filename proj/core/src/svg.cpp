#include "cipp/svg.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include "cipp/artifacts.hpp"
#include "cipp/errors.hpp"

namespace cipp {

namespace {

constexpr double kPanel = 500.0;
constexpr double kMargin = 40.0;

// Fits a world rectangle into one panel, preserving aspect and flipping y
// so up is up.
class Mapper {
public:
    Mapper(double panel_x, double lo_x, double hi_x, double lo_y, double hi_y)
        : panel_x_(panel_x), lo_x_(lo_x), lo_y_(lo_y) {
        const double span_x = std::max(hi_x - lo_x, 1e-9);
        const double span_y = std::max(hi_y - lo_y, 1e-9);
        scale_ = std::min((kPanel - 2 * kMargin) / span_x, (kPanel - 2 * kMargin) / span_y);
        off_x_ = panel_x_ + (kPanel - span_x * scale_) / 2.0;
        off_y_ = (kPanel + span_y * scale_) / 2.0;
    }

    double x(double wx) const { return off_x_ + (wx - lo_x_) * scale_; }
    double y(double wy) const { return off_y_ - (wy - lo_y_) * scale_; }

private:
    double panel_x_;
    double lo_x_, lo_y_;
    double scale_ = 1.0;
    double off_x_ = 0.0, off_y_ = 0.0;
};

void polyline(std::ofstream& out, const std::vector<std::pair<double, double>>& pts,
              const char* stroke, double width) {
    if (pts.empty()) return;
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
        << "\" points=\"";
    for (const auto& [x, y] : pts) out << format_double(x) << ',' << format_double(y) << ' ';
    out << "\"/>\n";
}

void structure_panel(std::ofstream& out, const TriangleMesh& mesh, const ViewpointSet& vps,
                     const std::vector<int>& order, int axis_a, int axis_b, double panel_x,
                     const char* title) {
    double lo_a = std::numeric_limits<double>::infinity(), hi_a = -lo_a;
    double lo_b = lo_a, hi_b = -lo_a;
    auto stretch = [&](const Eigen::Vector3d& p) {
        lo_a = std::min(lo_a, p[axis_a]);
        hi_a = std::max(hi_a, p[axis_a]);
        lo_b = std::min(lo_b, p[axis_b]);
        hi_b = std::max(hi_b, p[axis_b]);
    };
    for (const auto& v : mesh.vertices) stretch(v);
    for (const auto& vp : vps.viewpoints) stretch(vp.position);

    const Mapper map(panel_x, lo_a, hi_a, lo_b, hi_b);

    for (const auto& tri : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            const auto& p = mesh.vertices[tri[e]];
            const auto& q = mesh.vertices[tri[(e + 1) % 3]];
            out << "<line x1=\"" << format_double(map.x(p[axis_a])) << "\" y1=\""
                << format_double(map.y(p[axis_b])) << "\" x2=\""
                << format_double(map.x(q[axis_a])) << "\" y2=\""
                << format_double(map.y(q[axis_b])) << "\" stroke=\"#c8c8c8\" stroke-width=\"0.6\"/>\n";
        }
    }

    std::vector<std::pair<double, double>> path_pts;
    for (int idx : order) {
        const auto& p = vps.viewpoints[idx].position;
        path_pts.emplace_back(map.x(p[axis_a]), map.y(p[axis_b]));
    }
    polyline(out, path_pts, "#d62728", 1.2);

    for (const auto& vp : vps.viewpoints) {
        out << "<circle cx=\"" << format_double(map.x(vp.position[axis_a])) << "\" cy=\""
            << format_double(map.y(vp.position[axis_b])) << "\" r=\"2\" fill=\"#1f77b4\"/>\n";
    }
    out << "<text x=\"" << format_double(panel_x + 10) << "\" y=\"20\" font-size=\"14\" "
        << "font-family=\"sans-serif\">" << title << "</text>\n";
}

void convergence_panel(std::ofstream& out, const std::vector<double>& history, double panel_x) {
    out << "<text x=\"" << format_double(panel_x + 10) << "\" y=\"20\" font-size=\"14\" "
        << "font-family=\"sans-serif\">best fitness by iteration</text>\n";
    if (history.empty()) return;

    const double lo = *std::min_element(history.begin(), history.end());
    const double hi = *std::max_element(history.begin(), history.end());
    const Mapper map(panel_x, 1.0, static_cast<double>(history.size()), lo,
                     hi > lo ? hi : lo + 1.0);

    // axes
    out << "<line x1=\"" << format_double(map.x(1)) << "\" y1=\"" << format_double(map.y(lo))
        << "\" x2=\"" << format_double(map.x(static_cast<double>(history.size()))) << "\" y2=\""
        << format_double(map.y(lo)) << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << format_double(map.x(1)) << "\" y1=\"" << format_double(map.y(lo))
        << "\" x2=\"" << format_double(map.x(1)) << "\" y2=\""
        << format_double(map.y(hi > lo ? hi : lo + 1.0)) << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";

    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < history.size(); ++i)
        pts.emplace_back(map.x(static_cast<double>(i + 1)), map.y(history[i]));
    polyline(out, pts, "#2ca02c", 1.5);
}

} // namespace

void write_plan_svg(const TriangleMesh& mesh, const ViewpointSet& vps,
                    const std::vector<int>& order, const std::vector<double>& history,
                    const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot write: " + file.string());

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1500\" height=\"500\" "
        << "viewBox=\"0 0 1500 500\">\n";
    out << "<rect width=\"1500\" height=\"500\" fill=\"white\"/>\n";
    structure_panel(out, mesh, vps, order, 0, 1, 0.0, "plan view (x, y)");
    structure_panel(out, mesh, vps, order, 1, 2, kPanel, "elevation (y, z)");
    convergence_panel(out, history, 2 * kPanel);
    out << "</svg>\n";

    out.flush();
    if (!out) throw IoError("write failed: " + file.string());
}

} // namespace cipp
