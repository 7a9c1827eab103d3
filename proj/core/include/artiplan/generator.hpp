#pragma once

#include <cstdint>
#include <vector>

#include "artiplan/instance_io.hpp"

namespace artiplan {

struct GenOptions {
    Encoding scenario = Encoding::Sas; // Sas or Saes instance shape
    bool reject_trivial = false;       // redraw goals equal to the initial state
};

/// Seeded random instances over an n-element chain with the given number of
/// allowed orientations: uniform grid-aligned initial and goal angles for
/// every element. Extended instances declare grippers 1 and 2, both free,
/// with no joint centred. Deterministic for a fixed seed, and every emitted
/// instance passes the consistency checks.
std::vector<Instance> gen_instances(std::uint64_t seed, int links, int orientations,
                                    int count, const GenOptions& opts = {});

} // namespace artiplan
