#include "artiplan/planner.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "artiplan/consistency.hpp"
#include "artiplan/macro.hpp"
#include "artiplan/transition_sas.hpp"
#include "artiplan/transition_saes.hpp"

namespace artiplan {

namespace {

constexpr int kHardHorizonCap = 256;

struct RemainingMask {
    std::array<std::uint64_t, kHardHorizonCap / 64> bits{};

    bool test(int r) const { return bits[r >> 6] & (1ULL << (r & 63)); }
    void set(int r) { bits[r >> 6] |= 1ULL << (r & 63); }
};

struct SasDomain {
    using Action = SasAction;
    const Topology& topo;

    std::vector<Action> applicable(const State& s) const { return applicable_sas(s, topo); }
    State apply(const State& s, const Action& a) const { return apply_sas(s, topo, a); }
    GroundAction ground(const Action& a, int t) const { return to_ground(a, t); }
};

struct SaesDomain {
    using Action = SaesAction;
    const Topology& topo;

    std::vector<Action> applicable(const State& s) const { return applicable_saes(s, topo); }
    State apply(const State& s, const Action& a) const { return apply_saes(s, topo, a); }
    GroundAction ground(const Action& a, int t) const { return to_ground(a, t); }
};

struct MaesDomain {
    using Action = GroundAction;
    const Topology& topo;
    bool mixed = false;

    std::vector<Action> applicable(const State& s) const {
        return applicable_macro(s, topo, mixed);
    }
    State apply(const State& s, const Action& a) const { return apply_macro(s, topo, a); }
    GroundAction ground(const Action& a, int t) const {
        GroundAction g = a;
        g.timestep = t;
        return g;
    }
};

template <typename Domain>
class DepthFirstLayers {
public:
    DepthFirstLayers(const Domain& dom, const std::vector<std::pair<int, Angle>>& goals,
                     const Clock& clock, double deadline)
        : dom_(dom), goals_(goals), clock_(clock), deadline_(deadline) {}

    bool goal(const State& s) const {
        for (const auto& [element, angle] : goals_) {
            bool met = false;
            for (const auto& e : s.angles) {
                if (e.element == element) {
                    met = e.degrees == angle;
                    break;
                }
            }
            if (!met) {
                return false;
            }
        }
        return true;
    }

    // True when a plan of exactly `remaining` steps from s reaches the
    // goals; chosen_ then holds the actions in order.
    bool search(const State& s, int remaining) {
        if (remaining == 0) {
            return goal(s);
        }
        RemainingMask& mask = seen_[s];
        if (mask.test(remaining)) {
            return false;
        }
        mask.set(remaining);

        if (++expanded_ % 1024 == 0 && deadline_ > 0.0 && clock_.now() > deadline_) {
            timed_out_ = true;
            return false;
        }
        for (const auto& action : dom_.applicable(s)) {
            State next = dom_.apply(s, action);
            chosen_.push_back(action);
            if (search(next, remaining - 1)) {
                return true;
            }
            chosen_.pop_back();
            if (timed_out_) {
                return false;
            }
        }
        return false;
    }

    Plan plan() const {
        Plan p;
        for (size_t i = 0; i < chosen_.size(); ++i) {
            p.push_back(dom_.ground(chosen_[i], static_cast<int>(i)));
        }
        return p;
    }

    bool timed_out() const { return timed_out_; }
    std::uint64_t expanded() const { return expanded_; }

private:
    const Domain& dom_;
    const std::vector<std::pair<int, Angle>>& goals_;
    const Clock& clock_;
    double deadline_;
    std::unordered_map<State, RemainingMask, StateHash> seen_;
    std::vector<typename Domain::Action> chosen_;
    std::uint64_t expanded_ = 0;
    bool timed_out_ = false;
};

template <typename Domain>
SolveResult iterative_deepening(const Domain& dom, const Instance& inst,
                                const SolveOptions& opts) {
    const Clock& clock = opts.clock ? *opts.clock : steady_clock_instance();
    const double start = clock.now();
    const double deadline = opts.time_budget_s > 0.0 ? start + opts.time_budget_s : 0.0;
    const auto goals = inst.goals();
    const State initial = inst.initial_state();
    const int max_h = std::min(opts.max_horizon, kHardHorizonCap - 1);

    SolveResult result;
    DepthFirstLayers<Domain> dfs(dom, goals, clock, deadline);
    if (dfs.goal(initial)) {
        result.outcome = SolveResult::Outcome::FoundPlan;
        result.plan = Plan{};
        result.stats.elapsed_s = clock.now() - start;
        return result;
    }
    for (int h = 1; h <= max_h; ++h) {
        result.stats.horizon_reached = h;
        if (dfs.search(initial, h)) {
            result.outcome = SolveResult::Outcome::FoundPlan;
            result.plan = dfs.plan();
            break;
        }
        if (dfs.timed_out()) {
            result.outcome = SolveResult::Outcome::Timeout;
            break;
        }
    }
    result.stats.expanded = dfs.expanded();
    result.stats.elapsed_s = clock.now() - start;
    return result;
}

void require_compatible(const Instance& inst, Encoding encoding) {
    if ((encoding == Encoding::Sas) != (inst.scenario == Encoding::Sas)) {
        throw std::invalid_argument("encoding " + to_string(encoding) +
                                    " does not match the instance scenario");
    }
}

} // namespace

SolveResult solve(const Instance& inst, Encoding encoding, const SolveOptions& opts) {
    require_compatible(inst, encoding);
    const auto violations = check(inst);
    if (!violations.empty()) {
        throw std::invalid_argument("inconsistent instance: " +
                                    to_string(violations.front()));
    }
    const Topology topo = inst.topology();
    switch (encoding) {
    case Encoding::Sas:
        return iterative_deepening(SasDomain{topo}, inst, opts);
    case Encoding::Saes:
        return iterative_deepening(SaesDomain{topo}, inst, opts);
    case Encoding::Maes:
        return iterative_deepening(MaesDomain{topo, opts.mixed}, inst, opts);
    }
    throw std::logic_error("unreachable");
}

GoalCheckResult goal_check(const State& observed, const Plan& plan, int step,
                           const Instance& inst, Encoding encoding) {
    require_compatible(inst, encoding);
    if (step < 0 || step > static_cast<int>(plan.size())) {
        throw std::out_of_range("step outside the plan");
    }
    const Topology topo = inst.topology();

    const auto admissible = angles_for_granularity(topo.granularity);
    for (const auto& e : observed.angles) {
        if (!std::binary_search(admissible.begin(), admissible.end(), e.degrees)) {
            return {GoalCheckResult::Kind::ConsistencyFailure, std::nullopt,
                    "orientation " + std::to_string(e.degrees) + " of element " +
                        std::to_string(e.element) +
                        " is not compatible with the represented angle set"};
        }
    }

    State expected = inst.initial_state();
    for (int i = 0; i < step; ++i) {
        const GroundAction& a = plan[i];
        if (encoding == Encoding::Sas) {
            auto sa = sas_from_ground(a);
            if (!sa) {
                throw std::invalid_argument("not a chain-model action: " + a.name);
            }
            expected = apply_sas(expected, topo, *sa);
        } else if (encoding == Encoding::Saes) {
            auto sa = saes_from_ground(a);
            if (!sa) {
                throw std::invalid_argument("not an extended-model action: " + a.name);
            }
            expected = apply_saes(expected, topo, *sa);
        } else {
            expected = apply_macro(expected, topo, a);
        }
    }
    if (observed == expected) {
        return {GoalCheckResult::Kind::Ok, std::nullopt, ""};
    }
    GoalCheckResult r;
    r.kind = GoalCheckResult::Kind::NeedsReplan;
    r.replan_instance = make_instance(topo, observed, inst.goals());
    r.message = "observed state diverges from the plan at step " + std::to_string(step);
    return r;
}

} // namespace artiplan
