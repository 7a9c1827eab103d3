#include "artiplan/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace artiplan {

namespace {

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0); // normalize -0.00
    return buf;
}

constexpr double kPi = 3.14159265358979323846;

} // namespace

std::vector<std::pair<double, double>> chain_points(const State& config,
                                                    const Topology& topology,
                                                    const RenderSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0) {
        throw std::invalid_argument("canvas dimensions must be positive");
    }
    double total = 0.0;
    for (int e : topology.elements()) {
        total += spec.use_instance_lengths ? topology.length_of(e) : 1.0;
    }
    const double margin = 0.1 * std::min(spec.width, spec.height);
    const double radius = 0.5 * std::min(spec.width, spec.height) - margin;
    const double scale = total > 0.0 ? radius / total : 1.0;

    std::vector<std::pair<double, double>> pts;
    double x = spec.width / 2.0;
    double y = spec.height / 2.0;
    pts.emplace_back(x, y);
    for (int e : topology.elements()) {
        const double len =
            (spec.use_instance_lengths ? topology.length_of(e) : 1.0) * scale;
        const double theta = config.angle_of(e) * kPi / 180.0;
        x += len * std::cos(theta);
        y -= len * std::sin(theta); // SVG y axis points down
        pts.emplace_back(x, y);
    }
    return pts;
}

std::string render_config(const State& config, const Topology& topology,
                          const RenderSpec& spec) {
    const auto pts = chain_points(config, topology, spec);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << spec.width << "\" height=\"" << spec.height << "\" viewBox=\"0 0 "
        << spec.width << " " << spec.height << "\">\n";
    svg << "  <polyline fill=\"none\" stroke=\"#1f3a5f\" stroke-width=\""
        << fixed2(spec.stroke_width) << "\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) {
            svg << " ";
        }
        svg << fixed2(pts[i].first) << "," << fixed2(pts[i].second);
    }
    svg << "\"/>\n";
    for (size_t i = 0; i < pts.size(); ++i) {
        const bool endpoint = i == 0 || i + 1 == pts.size();
        svg << "  <circle cx=\"" << fixed2(pts[i].first) << "\" cy=\""
            << fixed2(pts[i].second) << "\" r=\"" << fixed2(spec.stroke_width * 1.25)
            << "\" fill=\"" << (endpoint ? "#777777" : "#d95f02") << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace artiplan
