#pragma once

#include <string>
#include <vector>

namespace artiplan {

/// A grounded operator instance: schema name, argument tuple (without the
/// trailing timestep) and the 0-based timestep it occupies.
struct GroundAction {
    std::string name;
    std::vector<int> args;
    int timestep = 0;

    bool operator==(const GroundAction&) const = default;
};

/// An ordered action sequence with exactly one action per timestep 0..n-1.
using Plan = std::vector<GroundAction>;

/// True when timesteps are consecutive from 0, one action each.
bool plan_well_formed(const Plan& plan);

} // namespace artiplan
