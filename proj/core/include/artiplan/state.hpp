#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "artiplan/topology.hpp"

namespace artiplan {

/// One fluent valuation: element orientations plus, in the extended models,
/// gripper and centering fluents. Immutable value type; transitions return
/// fresh states.
///
/// `grasps` and `free_grippers` partition the declared grippers, and a link
/// is in hand exactly when some gripper grasps it, so in-hand membership is
/// derived rather than stored. Sas states keep the gripper fields empty.
struct State {
    struct AngleEntry {
        int element; // joint id (Sas) or link id (extended)
        Angle degrees;
        auto operator<=>(const AngleEntry&) const = default;
    };
    struct Grasp {
        GripperId gripper;
        LinkId link;
        auto operator<=>(const Grasp&) const = default;
    };

    std::vector<AngleEntry> angles;      // sorted by element
    std::vector<Grasp> grasps;           // sorted by gripper
    std::vector<GripperId> free_grippers; // sorted
    std::optional<JointId> in_centre;

    bool operator==(const State&) const = default;

    Angle angle_of(int element) const;
    void set_angle(int element, Angle a);
    bool in_hand(LinkId l) const;
    std::optional<LinkId> grasp_of(GripperId g) const;
    bool is_free(GripperId g) const;

    void add_grasp(GripperId g, LinkId l);   // moves g out of free_grippers
    void release_grasp(GripperId g);         // moves g back to free_grippers

    /// All elements at the given angles, all grippers free, nothing centred.
    static State from_angles(const Topology& topology, const std::vector<Angle>& degs);
};

struct StateHash {
    size_t operator()(const State& s) const;
};

/// Sets `rotated` to `target` and shifts every element strictly beyond it,
/// on the side away from `held` (ids above `rotated` when rotated > held,
/// below it otherwise), by the same angular delta.
void rotate_and_propagate(State& s, const Topology& topology, int rotated, int held,
                          Angle target, Angle current);

/// Absolute configuration -> relative tuple: first entry is the first
/// absolute angle (the hidden reference link's frame), entry i is the
/// normalized difference to the previous element.
std::vector<Angle> to_relative(const State& config, const Topology& topology);

/// Inverse of to_relative: re-accumulates the absolute configuration.
State to_absolute(const std::vector<Angle>& relative, const Topology& topology);

} // namespace artiplan
