#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"

namespace artiplan {

/// One chain-model rotation: joint `rotated` turns from `current` to
/// `target` while the link at the lower-numbered adjacent joint `held` is
/// kept steady. Rotating joint j drags every joint above j along.
struct SasAction {
    JointId rotated = 0;
    JointId held = 0;
    Angle target = 0;
    Angle current = 0;

    bool operator==(const SasAction&) const = default;
};

GroundAction to_ground(const SasAction& a, int timestep);
std::optional<SasAction> sas_from_ground(const GroundAction& a);

/// Every rotation applicable in the state: adjacent joint pairs with the
/// rotated joint the higher-numbered one, and a target exactly one
/// granularity step from the current angle (wraparound included).
/// Canonically ordered by (rotated, held, target).
std::vector<SasAction> applicable_sas(const State& s, const Topology& topo);

/// Why the action cannot fire in this state, or nullopt if it can.
std::optional<std::string> sas_inapplicable_reason(const State& s, const Topology& topo,
                                                   const SasAction& a);

/// Successor state: the rotated joint takes the target angle and all joints
/// above it shift by the same delta; joints below, and the hidden reference
/// joint, are untouched. Throws std::invalid_argument when inapplicable.
State apply_sas(const State& s, const Topology& topo, const SasAction& a);

} // namespace artiplan
