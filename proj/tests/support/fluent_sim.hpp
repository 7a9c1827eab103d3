#pragma once

#include <optional>
#include <set>
#include <utility>

#include "artiplan/instance_io.hpp"
#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"

namespace artiplan::testsupport {

/// Explicit fact-set semantics: fluents are plain tuples at one timestep and
/// every transition recomputes the next step's facts rule by rule (action
/// body, effect rules, frame rules), independently of the library's State
/// operations. Used to cross-check the transition modules.
struct FactDb {
    // static facts
    std::set<int> joints;
    std::set<int> links;
    std::set<int> grippers;
    std::set<int> angles;
    std::set<std::pair<int, int>> is_linked; // symmetric, hidden joint included
    std::set<std::pair<int, int>> connected;
    int granularity = 90;

    // fluents at the current step
    std::set<std::pair<int, int>> has_angle; // (element, angle)
    std::set<int> in_hand;
    std::set<std::pair<int, int>> grasped; // (gripper, link)
    std::set<int> free_grippers;
    std::optional<int> centre; // exclusive and inertial

    bool operator==(const FactDb&) const = default;
};

FactDb to_facts(const Topology& topo, const State& s);
State to_state(const FactDb& db, const Topology& topo);

/// Whether the ground action's selection body (including the angle-step
/// admissibility conditions) holds in the fact set.
bool action_selectable(const FactDb& db, Encoding encoding, const GroundAction& a);

/// Next-step facts under the encoding's effect and frame rules. The action
/// must be selectable.
FactDb step(const FactDb& db, Encoding encoding, const GroundAction& a);

} // namespace artiplan::testsupport
