#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artiplan/state.hpp"

namespace artiplan {

struct RenderSpec {
    int width = 400;
    int height = 400;
    double stroke_width = 4.0;
    bool use_instance_lengths = true; // otherwise every segment gets unit length
};

/// Chain endpoints in canvas coordinates, starting at the canvas centre:
/// segment i extends with the element's length in its absolute direction
/// (mathematical orientation, y up; flipped into the SVG y-down frame).
std::vector<std::pair<double, double>> chain_points(const State& config,
                                                    const Topology& topology,
                                                    const RenderSpec& spec);

/// Deterministic SVG 1.1 document: the chain as a polyline scaled to fit the
/// canvas, joints drawn as circles.
std::string render_config(const State& config, const Topology& topology,
                          const RenderSpec& spec = {});

} // namespace artiplan
