#include "artiplan/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace artiplan {

Angle State::angle_of(int element) const {
    for (const auto& e : angles) {
        if (e.element == element) {
            return e.degrees;
        }
    }
    throw std::out_of_range("no angle recorded for element " + std::to_string(element));
}

void State::set_angle(int element, Angle a) {
    for (auto& e : angles) {
        if (e.element == element) {
            e.degrees = a;
            return;
        }
    }
    throw std::out_of_range("no angle recorded for element " + std::to_string(element));
}

bool State::in_hand(LinkId l) const {
    return std::any_of(grasps.begin(), grasps.end(),
                       [l](const Grasp& g) { return g.link == l; });
}

std::optional<LinkId> State::grasp_of(GripperId g) const {
    for (const auto& gr : grasps) {
        if (gr.gripper == g) {
            return gr.link;
        }
    }
    return std::nullopt;
}

bool State::is_free(GripperId g) const {
    return std::binary_search(free_grippers.begin(), free_grippers.end(), g);
}

void State::add_grasp(GripperId g, LinkId l) {
    auto it = std::lower_bound(free_grippers.begin(), free_grippers.end(), g);
    if (it != free_grippers.end() && *it == g) {
        free_grippers.erase(it);
    }
    grasps.insert(std::lower_bound(grasps.begin(), grasps.end(), Grasp{g, l},
                                   [](const Grasp& a, const Grasp& b) {
                                       return a.gripper < b.gripper;
                                   }),
                  Grasp{g, l});
}

void State::release_grasp(GripperId g) {
    auto it = std::find_if(grasps.begin(), grasps.end(),
                           [g](const Grasp& gr) { return gr.gripper == g; });
    if (it == grasps.end()) {
        return;
    }
    grasps.erase(it);
    free_grippers.insert(
        std::lower_bound(free_grippers.begin(), free_grippers.end(), g), g);
}

State State::from_angles(const Topology& topology, const std::vector<Angle>& degs) {
    const auto& els = topology.elements();
    if (degs.size() != els.size()) {
        throw std::invalid_argument("angle tuple size does not match element count");
    }
    State s;
    s.angles.reserve(els.size());
    for (size_t i = 0; i < els.size(); ++i) {
        s.angles.push_back({els[i], normalize_angle(degs[i])});
    }
    s.free_grippers = topology.grippers;
    return s;
}

size_t StateHash::operator()(const State& s) const {
    auto mix = [](size_t h, size_t v) {
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    size_t h = 0x51ed270b;
    for (const auto& e : s.angles) {
        h = mix(h, static_cast<size_t>(e.element) * 1315423911u + static_cast<size_t>(e.degrees));
    }
    for (const auto& g : s.grasps) {
        h = mix(h, static_cast<size_t>(g.gripper) * 2654435761u + static_cast<size_t>(g.link));
    }
    for (GripperId g : s.free_grippers) {
        h = mix(h, static_cast<size_t>(g) + 0xabcd);
    }
    h = mix(h, s.in_centre ? static_cast<size_t>(*s.in_centre) + 1 : 0);
    return h;
}

void rotate_and_propagate(State& s, const Topology& topology, int rotated, int held,
                          Angle target, Angle current) {
    (void)topology;
    const int delta = target - current;
    const bool forward = rotated > held;
    for (auto& e : s.angles) {
        if (e.element == rotated) {
            e.degrees = normalize_angle(target);
        } else if (forward ? e.element > rotated : e.element < rotated) {
            e.degrees = normalize_angle(e.degrees + delta);
        }
    }
}

std::vector<Angle> to_relative(const State& config, const Topology& topology) {
    const auto& els = topology.elements();
    std::vector<Angle> rel;
    rel.reserve(els.size());
    Angle prev = 0;
    for (size_t i = 0; i < els.size(); ++i) {
        const Angle abs = config.angle_of(els[i]);
        rel.push_back(i == 0 ? abs : normalize_angle(abs - prev));
        prev = abs;
    }
    return rel;
}

State to_absolute(const std::vector<Angle>& relative, const Topology& topology) {
    std::vector<Angle> abs;
    abs.reserve(relative.size());
    Angle acc = 0;
    for (size_t i = 0; i < relative.size(); ++i) {
        acc = i == 0 ? normalize_angle(relative[0]) : normalize_angle(acc + relative[i]);
        abs.push_back(acc);
    }
    return State::from_angles(topology, abs);
}

} // namespace artiplan
