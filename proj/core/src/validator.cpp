#include "artiplan/validator.hpp"

#include <stdexcept>

#include "artiplan/schema.hpp"

namespace artiplan {

ValidationReport validate(const Instance& inst, const Plan& plan, Encoding encoding,
                          bool allow_mixed) {
    if ((encoding == Encoding::Sas) != (inst.scenario == Encoding::Sas)) {
        throw std::invalid_argument("encoding does not match the instance scenario");
    }
    const Topology topo = inst.topology();
    ValidationReport report;
    State state = inst.initial_state();
    report.trace.push_back(state);

    auto fail = [&report](int step, std::string reason) {
        report.verdict = ValidationReport::Verdict::Invalid;
        report.failing_step = step;
        report.reason = std::move(reason);
        return report;
    };

    if (!plan_well_formed(plan)) {
        return fail(0, "plan timesteps are not consecutive from 0");
    }
    for (size_t i = 0; i < plan.size(); ++i) {
        const GroundAction& a = plan[i];
        const OperatorSchema* schema =
            find_schema(encoding, a.name, a.args.size(), allow_mixed);
        if (!schema) {
            return fail(static_cast<int>(i), "operator " + a.name + "/" +
                                                 std::to_string(a.args.size()) +
                                                 " is not part of this encoding");
        }
        if (auto unsat = first_unsatisfied(*schema, a.args, state, topo)) {
            return fail(static_cast<int>(i), "precondition failed: " + *unsat);
        }
        state = apply_schema(*schema, a.args, state, topo);
        report.trace.push_back(state);
    }
    for (const auto& [element, angle] : inst.goals()) {
        bool met = false;
        for (const auto& e : state.angles) {
            if (e.element == element) {
                met = e.degrees == angle;
                break;
            }
        }
        if (!met) {
            return fail(static_cast<int>(plan.size()),
                        "goal(" + std::to_string(element) + "," + std::to_string(angle) +
                            ") not satisfied in the final state");
        }
    }
    return report;
}

std::string to_string(const ValidationReport& r) {
    if (r.valid()) {
        return "valid";
    }
    return "invalid at step " +
           (r.failing_step ? std::to_string(*r.failing_step) : std::string("?")) + ": " +
           r.reason;
}

} // namespace artiplan
