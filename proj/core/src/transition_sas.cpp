#include "artiplan/transition_sas.hpp"

#include <algorithm>
#include <stdexcept>

namespace artiplan {

GroundAction to_ground(const SasAction& a, int timestep) {
    return GroundAction{"changeAngle", {a.rotated, a.held, a.target, a.current}, timestep};
}

std::optional<SasAction> sas_from_ground(const GroundAction& a) {
    if (a.name != "changeAngle" || a.args.size() != 4) {
        return std::nullopt;
    }
    return SasAction{a.args[0], a.args[1], a.args[2], a.args[3]};
}

std::vector<SasAction> applicable_sas(const State& s, const Topology& topo) {
    std::vector<SasAction> out;
    for (JointId j1 : topo.joints) {
        const Angle current = s.angle_of(j1);
        Angle targets[2] = {normalize_angle(current - topo.granularity),
                            normalize_angle(current + topo.granularity)};
        std::sort(std::begin(targets), std::end(targets));
        for (JointId j2 = 0; j2 < j1; ++j2) {
            if (!topo.is_linked(j1, j2)) {
                continue;
            }
            for (int k = 0; k < 2; ++k) {
                if (k == 1 && targets[1] == targets[0]) {
                    break; // 180-degree granularity: both steps coincide
                }
                if (targets[k] != current) {
                    out.push_back(SasAction{j1, j2, targets[k], current});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SasAction& a, const SasAction& b) {
        return std::tie(a.rotated, a.held, a.target) <
               std::tie(b.rotated, b.held, b.target);
    });
    return out;
}

std::optional<std::string> sas_inapplicable_reason(const State& s, const Topology& topo,
                                                   const SasAction& a) {
    if (!topo.is_joint(a.rotated)) {
        return "joint " + std::to_string(a.rotated) + " is not declared";
    }
    if (a.held != 0 && !topo.is_joint(a.held)) {
        return "joint " + std::to_string(a.held) + " is not declared";
    }
    if (a.rotated <= a.held) {
        return "rotated joint must be above the held joint";
    }
    if (!topo.is_linked(a.rotated, a.held)) {
        return "joints " + std::to_string(a.rotated) + " and " +
               std::to_string(a.held) + " are not linked";
    }
    if (a.target == a.current) {
        return "target angle equals the current angle";
    }
    if (s.angle_of(a.rotated) != a.current) {
        return "joint " + std::to_string(a.rotated) + " is not at angle " +
               std::to_string(a.current);
    }
    if (!one_step_apart(topo.granularity, a.target, a.current)) {
        return "angle change " + std::to_string(a.current) + " -> " +
               std::to_string(a.target) + " is not a single granularity step";
    }
    return std::nullopt;
}

State apply_sas(const State& s, const Topology& topo, const SasAction& a) {
    if (auto reason = sas_inapplicable_reason(s, topo, a)) {
        throw std::invalid_argument("inapplicable changeAngle: " + *reason);
    }
    State next = s;
    rotate_and_propagate(next, topo, a.rotated, a.held, a.target, a.current);
    return next;
}

} // namespace artiplan
