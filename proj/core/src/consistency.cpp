#include "artiplan/consistency.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace artiplan {

namespace {

int rule_rank(const std::string& rule) {
    static const std::vector<std::string> order = {
        "c1a", "c1b", "c2",  "c3a", "c3a'", "c3b", "c3c", "c4a", "c4b", "c6",
        "c8",  "c9",  "c10", "c13", "c14",  "c15", "c16", "c17", "c18", "c19",
        "c20", "c21", "c22", "c23", "c24",  "c25",
    };
    auto it = std::find(order.begin(), order.end(), rule);
    return static_cast<int>(it - order.begin());
}

} // namespace

std::string to_string(const Violation& v) {
    std::string out = v.rule + ":";
    for (const std::string& f : v.facts) {
        out += " " + f;
    }
    return out + ": " + v.message;
}

std::vector<Violation> check(const Instance& inst) {
    std::vector<Violation> out;
    auto add = [&out](std::string rule, std::vector<std::string> facts, std::string msg) {
        out.push_back(Violation{std::move(rule), std::move(facts), std::move(msg)});
    };

    const bool extended = inst.scenario != Encoding::Sas;
    const auto joints = inst.joints();
    const auto links = inst.links();
    const auto grippers = inst.grippers();
    const auto angles = inst.declared_angles();
    const auto is_in = [](const std::vector<int>& v, int x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    const auto& elements = extended ? links : joints;
    const char* element_sort = extended ? "link" : "joint";

    for (const Fact& f : inst.facts) {
        const std::string txt = to_string(f);
        if (f.pred == "isLinked") {
            if (!is_in(joints, f.args[0])) {
                add("c1a", {txt}, "first endpoint is not a declared joint");
            }
            if (!is_in(joints, f.args[1])) {
                add("c1b", {txt}, "second endpoint is not a declared joint");
            }
            if (f.args[0] == f.args[1]) {
                add("c2", {txt}, "a joint cannot be linked to itself");
            }
        } else if (f.pred == "hasAngle") {
            if (!is_in(elements, f.args[0])) {
                add(extended ? "c3a'" : "c3a", {txt},
                    std::string("element is not a declared ") + element_sort);
            }
            if (!is_in(angles, f.args[1])) {
                add("c3b", {txt}, "angle value is not a declared angle");
            }
            if (!inst.time_declared(f.args[2])) {
                add("c3c", {txt}, "time step is not declared");
            }
        } else if (f.pred == "goal") {
            if (!is_in(elements, f.args[0])) {
                add("c4a", {txt},
                    std::string("goal element is not a declared ") + element_sort);
            }
            if (!is_in(angles, f.args[1])) {
                add("c4b", {txt}, "goal angle is not a declared angle");
            }
        } else if (f.pred == "connected") {
            if (!is_in(joints, f.args[0])) {
                add("c15", {txt}, "connected joint is not declared");
            }
            if (!is_in(links, f.args[1])) {
                add("c16", {txt}, "connected link is not declared");
            }
        } else if (f.pred == "in_centre") {
            if (!is_in(joints, f.args[0])) {
                add("c17", {txt}, "centred element is not a declared joint");
            }
            if (!inst.time_declared(f.args[1])) {
                add("c18", {txt}, "time step is not declared");
            }
        } else if (f.pred == "in_hand") {
            if (!is_in(links, f.args[0])) {
                add("c19", {txt}, "in-hand element is not a declared link");
            }
            if (!inst.time_declared(f.args[1])) {
                add("c20", {txt}, "time step is not declared");
            }
        } else if (f.pred == "grasped") {
            if (!is_in(grippers, f.args[0])) {
                add("c21", {txt}, "grasping gripper is not declared");
            }
            if (!is_in(links, f.args[1])) {
                add("c22", {txt}, "grasped element is not a declared link");
            }
            if (!inst.time_declared(f.args[2])) {
                add("c23", {txt}, "time step is not declared");
            }
        } else if (f.pred == "free") {
            if (!is_in(grippers, f.args[0])) {
                add("c24", {txt}, "free gripper is not declared");
            }
            if (!inst.time_declared(f.args[1])) {
                add("c25", {txt}, "time step is not declared");
            }
        }
    }

    // At most one goal and exactly one initial angle per element.
    std::map<int, std::set<Angle>> goal_angles;
    std::map<int, std::set<Angle>> initial_angles;
    for (const Fact& f : inst.facts) {
        if (f.pred == "goal") {
            goal_angles[f.args[0]].insert(f.args[1]);
        } else if (f.pred == "hasAngle" && f.args[2] == 0) {
            initial_angles[f.args[0]].insert(f.args[1]);
        }
    }
    for (const auto& [element, set] : goal_angles) {
        if (set.size() > 1) {
            add("c6", {"goal element " + std::to_string(element)},
                "more than one goal for the same element");
        }
    }
    for (int e : elements) {
        auto it = initial_angles.find(e);
        const size_t n = it == initial_angles.end() ? 0 : it->second.size();
        if (n != 1) {
            add("c8", {std::string(element_sort) + " " + std::to_string(e)},
                n == 0 ? "no initial angle at time step 0"
                       : "more than one initial angle at time step 0");
        }
    }

    if (!inst.time_declared(0)) {
        add("c9", {"time(...)"}, "time step 0 is not declared");
    }
    if (!std::binary_search(angles.begin(), angles.end(), 0)) {
        add("c10", {"angle(0)"}, "angle 0 must always be declared");
    }

    // Declared angles must be exactly the granularity-generated set.
    const std::vector<Angle> possible = angles_for_granularity(inst.granularity);
    for (Angle a : possible) {
        if (!std::binary_search(angles.begin(), angles.end(), a)) {
            add("c13", {"angle(" + std::to_string(a) + ")"},
                "granularity-generated angle is not declared");
        }
    }
    for (Angle a : angles) {
        if (!std::binary_search(possible.begin(), possible.end(), a)) {
            add("c14", {"angle(" + std::to_string(a) + ")"},
                "declared angle is not generated by the granularity");
        }
    }

    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        const int ra = rule_rank(a.rule);
        const int rb = rule_rank(b.rule);
        if (ra != rb) {
            return ra < rb;
        }
        return a.facts < b.facts;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace artiplan
