#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artiplan/instance_io.hpp"
#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"

namespace artiplan {

/// Outcome of an independent plan replay: preconditions are re-derived from
/// the operator schemas (not from the transition modules' successor
/// enumerators) at every step, then the final state is tested against every
/// goal.
struct ValidationReport {
    enum class Verdict { Valid, Invalid } verdict = Verdict::Valid;
    std::optional<int> failing_step; // plan size means the goal test failed
    std::string reason;
    std::vector<State> trace; // states visited, initial state included

    bool valid() const { return verdict == Verdict::Valid; }
};

ValidationReport validate(const Instance& inst, const Plan& plan, Encoding encoding,
                          bool allow_mixed = false);

std::string to_string(const ValidationReport& r);

} // namespace artiplan
