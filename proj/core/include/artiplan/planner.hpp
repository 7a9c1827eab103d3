#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "artiplan/clock.hpp"
#include "artiplan/instance_io.hpp"
#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"

namespace artiplan {

struct SolveOptions {
    int max_horizon = 64;            // capped at 256
    double time_budget_s = 0.0;      // 0: unlimited
    bool mixed = false;              // Maes only: keep the elementary operators too
    const Clock* clock = nullptr;    // defaults to the process steady clock
};

struct SolveStats {
    std::uint64_t expanded = 0; // states whose successors were generated
    double elapsed_s = 0.0;
    int horizon_reached = 0;
};

struct SolveResult {
    enum class Outcome { FoundPlan, UnsatWithinLimit, Timeout } outcome =
        Outcome::UnsatWithinLimit;
    std::optional<Plan> plan;
    SolveStats stats;

    bool found() const { return outcome == Outcome::FoundPlan; }
};

/// Shortest-plan search: tries horizons 0, 1, 2, ... and at each horizon
/// runs a depth-first search over the layered action space, one action per
/// step, with visited-state pruning keyed by (state, remaining steps). The
/// first plan found is therefore length-minimal in the chosen encoding's
/// action vocabulary, and deterministic under the canonical action order.
/// Throws if the instance fails consistency or the encoding does not match
/// the instance scenario.
SolveResult solve(const Instance& inst, Encoding encoding, const SolveOptions& opts = {});

/// Compares an observed mid-execution state against the state the plan
/// prefix up to `step` predicts. On mismatch, produces a fresh instance
/// starting from the observed state with the original goals, ready for
/// replanning. Observed angles off the granularity grid are a consistency
/// failure, not a replanning trigger.
struct GoalCheckResult {
    enum class Kind { Ok, NeedsReplan, ConsistencyFailure } kind = Kind::Ok;
    std::optional<Instance> replan_instance;
    std::string message;
};

GoalCheckResult goal_check(const State& observed, const Plan& plan, int step,
                           const Instance& inst, Encoding encoding);

} // namespace artiplan
