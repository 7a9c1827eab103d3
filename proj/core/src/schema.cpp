#include "artiplan/schema.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "artiplan/macro.hpp"

namespace artiplan {

std::string to_string(Sort s) {
    switch (s) {
    case Sort::Link:
        return "link";
    case Sort::Joint:
        return "joint";
    case Sort::Gripper:
        return "gripper";
    case Sort::Angle:
        return "angle";
    }
    return "?";
}

std::string to_string(const Literal& l) {
    std::string out = l.positive ? "" : "not ";
    out += l.pred + "(";
    for (size_t i = 0; i < l.args.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += l.args[i];
    }
    return out + ")";
}

std::string to_string(const Guard& g) {
    return g.a + (g.kind == Guard::Kind::NotEqual ? "<>" : ">") + g.b;
}

std::optional<Sort> OperatorSchema::sort_of(const std::string& var) const {
    for (const Param& p : params) {
        if (p.name == var) {
            return p.sort;
        }
    }
    return std::nullopt;
}

std::vector<std::string> pre_set_strings(const OperatorSchema& s) {
    std::vector<std::string> out;
    for (const Param& p : s.params) {
        out.push_back(to_string(p.sort) + "(" + p.name + ")");
    }
    for (const Guard& g : s.guards) {
        out.push_back(to_string(g));
    }
    for (const Literal& l : s.pre) {
        out.push_back(to_string(l));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> effect_set_strings(const std::vector<Literal>& ls) {
    std::vector<std::string> out;
    for (const Literal& l : ls) {
        out.push_back(to_string(l));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct Grounding {
    const OperatorSchema& schema;
    const std::vector<int>& args;

    int value(const std::string& var) const {
        for (size_t i = 0; i < schema.params.size(); ++i) {
            if (schema.params[i].name == var) {
                return args[i];
            }
        }
        throw std::logic_error("unbound schema variable " + var);
    }
};

bool sort_holds(Sort sort, int v, const Topology& topo) {
    switch (sort) {
    case Sort::Link:
        return topo.scenario == Encoding::Sas ? topo.is_joint(v) : topo.is_link(v);
    case Sort::Joint:
        // The hidden reference joint 0 is a valid joint in the chain model.
        return topo.is_joint(v) || (topo.scenario == Encoding::Sas && v == 0);
    case Sort::Gripper:
        return topo.is_gripper(v);
    case Sort::Angle: {
        const auto all = angles_for_granularity(topo.granularity);
        return std::binary_search(all.begin(), all.end(), v);
    }
    }
    return false;
}

bool fluent_holds(const Literal& l, const Grounding& g, const State& s,
                  const Topology& topo) {
    const auto arg = [&](size_t i) { return g.value(l.args[i]); };
    if (l.pred == "hasAngle") {
        for (const auto& e : s.angles) {
            if (e.element == arg(0)) {
                return e.degrees == arg(1);
            }
        }
        return false;
    }
    if (l.pred == "in_centre") {
        return s.in_centre && *s.in_centre == arg(0);
    }
    if (l.pred == "in_hand") {
        return s.in_hand(arg(0));
    }
    if (l.pred == "grasped") {
        return s.grasp_of(arg(0)) == std::optional<LinkId>(arg(1));
    }
    if (l.pred == "free") {
        return s.is_free(arg(0));
    }
    if (l.pred == "isLinked") {
        return topo.is_linked(arg(0), arg(1));
    }
    if (l.pred == "connected") {
        return topo.connected(arg(0), arg(1));
    }
    throw std::logic_error("unknown predicate in schema literal: " + l.pred);
}

} // namespace

std::optional<std::string> first_unsatisfied(const OperatorSchema& schema,
                                             const std::vector<int>& args,
                                             const State& s, const Topology& topo) {
    if (args.size() != schema.params.size()) {
        return "arity mismatch: expected " + std::to_string(schema.params.size()) +
               " arguments";
    }
    Grounding g{schema, args};
    for (size_t i = 0; i < schema.params.size(); ++i) {
        if (!sort_holds(schema.params[i].sort, args[i], topo)) {
            return to_string(schema.params[i].sort) + "(" + std::to_string(args[i]) + ")";
        }
    }
    for (const Guard& gu : schema.guards) {
        const int a = g.value(gu.a);
        const int b = g.value(gu.b);
        const bool ok = gu.kind == Guard::Kind::NotEqual ? a != b : a > b;
        if (!ok) {
            return std::to_string(a) + (gu.kind == Guard::Kind::NotEqual ? "<>" : ">") +
                   std::to_string(b);
        }
    }
    for (const Literal& l : schema.pre) {
        if (fluent_holds(l, g, s, topo) != l.positive) {
            std::string lit = to_string(l);
            std::string ground = l.positive ? "" : "not ";
            ground += l.pred + "(";
            for (size_t i = 0; i < l.args.size(); ++i) {
                ground += (i ? "," : "") + std::to_string(g.value(l.args[i]));
            }
            return ground + ")";
        }
    }
    if (schema.rotation) {
        const Angle target = g.value(schema.rotation->target);
        const Angle current = g.value(schema.rotation->current);
        if (!one_step_apart(topo.granularity, target, current)) {
            return "angle change " + std::to_string(current) + " -> " +
                   std::to_string(target) + " is not a single granularity step";
        }
    }
    return std::nullopt;
}

State apply_schema(const OperatorSchema& schema, const std::vector<int>& args,
                   const State& s, const Topology& topo) {
    Grounding g{schema, args};
    State next = s;
    for (const Literal& l : schema.del) {
        if (l.pred == "grasped") {
            if (next.grasp_of(g.value(l.args[0])) ==
                std::optional<LinkId>(g.value(l.args[1]))) {
                auto it = std::find_if(next.grasps.begin(), next.grasps.end(),
                                       [&](const State::Grasp& gr) {
                                           return gr.gripper == g.value(l.args[0]);
                                       });
                next.grasps.erase(it);
            }
        } else if (l.pred == "free") {
            const GripperId v = g.value(l.args[0]);
            auto it = std::lower_bound(next.free_grippers.begin(),
                                       next.free_grippers.end(), v);
            if (it != next.free_grippers.end() && *it == v) {
                next.free_grippers.erase(it);
            }
        } else if (l.pred == "in_centre") {
            if (next.in_centre == std::optional<JointId>(g.value(l.args[0]))) {
                next.in_centre.reset();
            }
        } else if (l.pred != "in_hand") { // in-hand membership is derived
            throw std::logic_error("unsupported delete effect " + l.pred);
        }
    }
    for (const Literal& l : schema.add) {
        if (l.pred == "grasped") {
            next.add_grasp(g.value(l.args[0]), g.value(l.args[1]));
        } else if (l.pred == "free") {
            const GripperId v = g.value(l.args[0]);
            auto it = std::lower_bound(next.free_grippers.begin(),
                                       next.free_grippers.end(), v);
            if (it == next.free_grippers.end() || *it != v) {
                next.free_grippers.insert(it, v);
            }
        } else if (l.pred == "in_centre") {
            // The workspace has a single centre: centering a joint displaces
            // any previously centred one.
            next.in_centre = g.value(l.args[0]);
        } else if (l.pred != "in_hand") {
            throw std::logic_error("unsupported add effect " + l.pred);
        }
    }
    if (schema.rotation) {
        rotate_and_propagate(next, topo, g.value(schema.rotation->rotated),
                             g.value(schema.rotation->held),
                             g.value(schema.rotation->target),
                             g.value(schema.rotation->current));
    }
    return next;
}

const OperatorSchema& sas_change_angle_schema() {
    static const OperatorSchema schema = [] {
        OperatorSchema s;
        s.name = "changeAngle";
        s.params = {{"J1", Sort::Joint},
                    {"J2", Sort::Joint},
                    {"A", Sort::Angle},
                    {"Ai", Sort::Angle}};
        s.guards = {{Guard::Kind::Greater, "J1", "J2"},
                    {Guard::Kind::NotEqual, "A", "Ai"}};
        s.pre = {{true, "hasAngle", {"J1", "Ai"}}, {true, "isLinked", {"J1", "J2"}}};
        s.rotation = Rotation{"J1", "J2", "A", "Ai"};
        return s;
    }();
    return schema;
}

const std::vector<OperatorSchema>& saes_schemas() {
    static const std::vector<OperatorSchema> schemas = [] {
        std::vector<OperatorSchema> v;

        OperatorSchema move;
        move.name = "move_link_to_central";
        move.params = {{"L1", Sort::Link}, {"J1", Sort::Joint}, {"G2", Sort::Gripper}};
        move.pre = {{true, "connected", {"J1", "L1"}},
                    {true, "free", {"G2"}},
                    {false, "in_hand", {"L1"}},
                    {false, "in_centre", {"J1"}}};
        move.add = {{true, "in_centre", {"J1"}}};
        v.push_back(std::move(move));

        OperatorSchema take;
        take.name = "take_links_to_move";
        take.params = {{"L1", Sort::Link},
                       {"L2", Sort::Link},
                       {"J1", Sort::Joint},
                       {"G1", Sort::Gripper},
                       {"G2", Sort::Gripper}};
        take.guards = {{Guard::Kind::NotEqual, "L1", "L2"},
                       {Guard::Kind::NotEqual, "G1", "G2"}};
        take.pre = {{true, "in_centre", {"J1"}},
                    {true, "free", {"G1"}},
                    {true, "free", {"G2"}},
                    {false, "in_hand", {"L1"}},
                    {false, "in_hand", {"L2"}},
                    {true, "connected", {"J1", "L1"}},
                    {true, "connected", {"J1", "L2"}}};
        take.del = {{true, "free", {"G1"}}, {true, "free", {"G2"}}};
        take.add = {{true, "in_hand", {"L1"}},
                    {true, "in_hand", {"L2"}},
                    {true, "grasped", {"G1", "L1"}},
                    {true, "grasped", {"G2", "L2"}}};
        v.push_back(std::move(take));

        OperatorSchema change;
        change.name = "changeAngle";
        change.params = {{"L1", Sort::Link},    {"L2", Sort::Link},
                         {"J1", Sort::Joint},   {"A1", Sort::Angle},
                         {"A2", Sort::Angle},   {"G1", Sort::Gripper},
                         {"G2", Sort::Gripper}};
        change.guards = {{Guard::Kind::NotEqual, "L1", "L2"},
                         {Guard::Kind::NotEqual, "G1", "G2"}};
        change.pre = {{true, "in_centre", {"J1"}},
                      {true, "grasped", {"G1", "L1"}},
                      {true, "grasped", {"G2", "L2"}},
                      {true, "in_hand", {"L1"}},
                      {true, "in_hand", {"L2"}},
                      {false, "free", {"G1"}},
                      {false, "free", {"G2"}},
                      {true, "connected", {"J1", "L1"}},
                      {true, "connected", {"J1", "L2"}},
                      {true, "hasAngle", {"L1", "A2"}}};
        change.rotation = Rotation{"L1", "L2", "A1", "A2"};
        v.push_back(std::move(change));

        OperatorSchema release;
        release.name = "release_links";
        release.params = {{"L1", Sort::Link},
                          {"L2", Sort::Link},
                          {"J1", Sort::Joint},
                          {"G1", Sort::Gripper},
                          {"G2", Sort::Gripper}};
        release.guards = {{Guard::Kind::NotEqual, "L1", "L2"},
                          {Guard::Kind::NotEqual, "G1", "G2"}};
        release.pre = {{true, "grasped", {"G2", "L2"}},
                       {true, "grasped", {"G1", "L1"}},
                       {true, "in_hand", {"L1"}},
                       {true, "in_hand", {"L2"}},
                       {false, "free", {"G1"}},
                       {false, "free", {"G2"}},
                       {true, "connected", {"J1", "L1"}},
                       {true, "connected", {"J1", "L2"}}};
        release.del = {{true, "grasped", {"G1", "L1"}},
                       {true, "grasped", {"G2", "L2"}},
                       {true, "in_hand", {"L1"}},
                       {true, "in_hand", {"L2"}}};
        release.add = {{true, "free", {"G1"}}, {true, "free", {"G2"}}};
        v.push_back(std::move(release));

        return v;
    }();
    return schemas;
}

const OperatorSchema* find_schema(Encoding encoding, const std::string& name,
                                  size_t arity, bool mixed) {
    auto matches = [&](const OperatorSchema& s) {
        return s.name == name && s.params.size() == arity;
    };
    if (encoding == Encoding::Sas) {
        const OperatorSchema& s = sas_change_angle_schema();
        return matches(s) ? &s : nullptr;
    }
    if (encoding == Encoding::Saes || mixed) {
        for (const OperatorSchema& s : saes_schemas()) {
            if (matches(s)) {
                return &s;
            }
        }
    }
    if (encoding == Encoding::Maes) {
        for (const MacroSchema& m : maes_action_set()) {
            if (matches(m.op)) {
                return &m.op;
            }
        }
    }
    return nullptr;
}

} // namespace artiplan
