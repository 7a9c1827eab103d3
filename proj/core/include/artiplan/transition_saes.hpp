#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"

namespace artiplan {

/// Centre the joint adjacent to `link` in the workspace, using a free
/// gripper to displace the object.
struct MoveLinkToCentral {
    LinkId link = 0;
    JointId joint = 0;
    GripperId gripper = 0;
    bool operator==(const MoveLinkToCentral&) const = default;
};

/// Grasp the two links around the centred joint, one gripper each.
struct TakeLinksToMove {
    LinkId l1 = 0, l2 = 0;
    JointId joint = 0;
    GripperId g1 = 0, g2 = 0;
    bool operator==(const TakeLinksToMove&) const = default;
};

/// Rotate grasped link `l1` about the centred joint from `current` to
/// `target` while `l2` is held. Propagation runs away from the held side.
struct SaesChangeAngle {
    LinkId l1 = 0, l2 = 0;
    JointId joint = 0;
    Angle target = 0, current = 0;
    GripperId g1 = 0, g2 = 0;
    bool operator==(const SaesChangeAngle&) const = default;
};

/// Let go of both grasped links, freeing both grippers.
struct ReleaseLinks {
    LinkId l1 = 0, l2 = 0;
    JointId joint = 0;
    GripperId g1 = 0, g2 = 0;
    bool operator==(const ReleaseLinks&) const = default;
};

using SaesAction =
    std::variant<MoveLinkToCentral, TakeLinksToMove, SaesChangeAngle, ReleaseLinks>;

GroundAction to_ground(const SaesAction& a, int timestep);
std::optional<SaesAction> saes_from_ground(const GroundAction& a);

/// All extended-model actions applicable in the state, canonically ordered:
/// operator kind in the order above, then the argument tuple.
std::vector<SaesAction> applicable_saes(const State& s, const Topology& topo);

std::optional<std::string> saes_inapplicable_reason(const State& s,
                                                    const Topology& topo,
                                                    const SaesAction& a);

/// Successor state. Centering is exclusive (a new centre displaces the old
/// one) and inertial; grasp and angle fluents persist unless changed.
/// Throws std::invalid_argument when inapplicable.
State apply_saes(const State& s, const Topology& topo, const SaesAction& a);

} // namespace artiplan
