#include "artiplan/macro.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "artiplan/transition_saes.hpp"

namespace artiplan {

namespace {

std::string mapped(const VarMap& map, const std::string& v) {
    for (const auto& [from, to] : map) {
        if (from == v) {
            return to;
        }
    }
    return v;
}

void validate_map(const VarMap& map) {
    std::set<std::string> targets;
    for (const auto& [from, to] : map) {
        (void)from;
        if (!targets.insert(to).second) {
            throw std::invalid_argument("variable map is not injective on " + to);
        }
    }
}

Literal rename(Literal l, const VarMap& map) {
    for (std::string& a : l.args) {
        a = mapped(map, a);
    }
    return l;
}

OperatorSchema rename(OperatorSchema s, const VarMap& map) {
    for (Param& p : s.params) {
        p.name = mapped(map, p.name);
    }
    for (Literal& l : s.pre) {
        l = rename(l, map);
    }
    for (Literal& l : s.add) {
        l = rename(l, map);
    }
    for (Literal& l : s.del) {
        l = rename(l, map);
    }
    for (Guard& g : s.guards) {
        g.a = mapped(map, g.a);
        g.b = mapped(map, g.b);
    }
    if (s.rotation) {
        s.rotation->rotated = mapped(map, s.rotation->rotated);
        s.rotation->held = mapped(map, s.rotation->held);
        s.rotation->target = mapped(map, s.rotation->target);
        s.rotation->current = mapped(map, s.rotation->current);
    }
    return s;
}

bool atom_in(const std::vector<Literal>& set, const Literal& l) {
    return std::any_of(set.begin(), set.end(), [&](const Literal& x) {
        return x.pred == l.pred && x.args == l.args;
    });
}

void push_unique(std::vector<Literal>& v, const Literal& l) {
    if (std::find(v.begin(), v.end(), l) == v.end()) {
        v.push_back(l);
    }
}

} // namespace

MacroSchema lift(const OperatorSchema& op) {
    MacroSchema m;
    m.op = op;
    Constituent c;
    c.schema_name = op.name;
    for (const Param& p : op.params) {
        c.arg_params.push_back(p.name);
    }
    m.constituents.push_back(std::move(c));
    return m;
}

Soundness check_soundness(const OperatorSchema& first, const OperatorSchema& second,
                          const VarMap& map) {
    validate_map(map);
    const OperatorSchema f = rename(first, map);
    std::vector<Literal> lost;
    for (const Literal& d : f.del) {
        if (!atom_in(f.add, d)) {
            lost.push_back(d);
        }
    }
    std::sort(lost.begin(), lost.end(), [](const Literal& a, const Literal& b) {
        return to_string(a) < to_string(b);
    });
    for (const Literal& d : lost) {
        for (const Literal& p : second.pre) {
            if (p.positive && p.pred == d.pred && p.args == d.args) {
                return Soundness{false, d};
            }
        }
    }
    return Soundness{};
}

MacroSchema compose(const MacroSchema& first, const OperatorSchema& second,
                    const VarMap& map, bool strict) {
    validate_map(map);
    if (strict) {
        if (Soundness s = check_soundness(first.op, second, map); !s) {
            throw std::invalid_argument("unsound composition: " + first.op.name +
                                        " deletes " + to_string(s.witness) +
                                        " required by " + second.name);
        }
    }
    const OperatorSchema f = rename(first.op, map);

    MacroSchema out;
    out.op.name = f.name + "__" + second.name;
    out.op.params = f.params;
    for (const Param& p : second.params) {
        auto it = std::find_if(out.op.params.begin(), out.op.params.end(),
                               [&](const Param& q) { return q.name == p.name; });
        if (it == out.op.params.end()) {
            out.op.params.push_back(p);
        } else if (it->sort != p.sort) {
            throw std::invalid_argument("sort mismatch for variable " + p.name);
        }
    }

    out.op.pre = f.pre;
    for (const Literal& l : second.pre) {
        // A precondition the first operator establishes is dropped: added
        // atoms satisfy positive literals, deleted atoms negated ones.
        if (l.positive && atom_in(f.add, l)) {
            continue;
        }
        if (!l.positive && atom_in(f.del, Literal{true, l.pred, l.args})) {
            continue;
        }
        push_unique(out.op.pre, l);
    }
    out.op.guards = f.guards;
    for (const Guard& g : second.guards) {
        if (std::find(out.op.guards.begin(), out.op.guards.end(), g) ==
            out.op.guards.end()) {
            out.op.guards.push_back(g);
        }
    }
    for (const Literal& l : f.del) {
        if (!atom_in(second.add, l)) {
            push_unique(out.op.del, l);
        }
    }
    for (const Literal& l : second.del) {
        push_unique(out.op.del, l);
    }
    for (const Literal& l : f.add) {
        if (!atom_in(second.del, l)) {
            push_unique(out.op.add, l);
        }
    }
    for (const Literal& l : second.add) {
        push_unique(out.op.add, l);
    }

    if (f.rotation && second.rotation) {
        throw std::invalid_argument("cannot compose two rotation operators");
    }
    out.op.rotation = f.rotation ? f.rotation : second.rotation;

    out.constituents = first.constituents;
    for (Constituent& c : out.constituents) {
        for (std::string& a : c.arg_params) {
            a = mapped(map, a);
        }
    }
    Constituent cs;
    cs.schema_name = second.name;
    for (const Param& p : second.params) {
        cs.arg_params.push_back(p.name);
    }
    out.constituents.push_back(std::move(cs));
    return out;
}

MacroSchema compose(const OperatorSchema& first, const OperatorSchema& second,
                    const VarMap& map, bool strict) {
    return compose(lift(first), second, map, strict);
}

MacroSchema with_signature(MacroSchema m, std::string name,
                           const std::vector<std::string>& param_order) {
    if (param_order.size() != m.op.params.size()) {
        throw std::invalid_argument("signature arity does not match composed schema");
    }
    std::vector<Param> reordered;
    for (const std::string& n : param_order) {
        auto it = std::find_if(m.op.params.begin(), m.op.params.end(),
                               [&](const Param& p) { return p.name == n; });
        if (it == m.op.params.end()) {
            throw std::invalid_argument("unknown parameter " + n + " in signature");
        }
        reordered.push_back(*it);
    }
    m.op.params = std::move(reordered);
    m.op.name = std::move(name);
    return m;
}

const std::vector<MacroSchema>& maes_action_set() {
    static const std::vector<MacroSchema> macros = [] {
        std::vector<MacroSchema> v;

        MacroSchema m1;
        m1.op.name = "linkToCentral_take";
        m1.op.params = {{"L1", Sort::Link},
                        {"L2", Sort::Link},
                        {"J1", Sort::Joint},
                        {"G1", Sort::Gripper},
                        {"G2", Sort::Gripper}};
        m1.op.guards = {{Guard::Kind::NotEqual, "L1", "L2"},
                        {Guard::Kind::NotEqual, "G1", "G2"}};
        m1.op.pre = {{true, "connected", {"J1", "L1"}},
                     {true, "free", {"G2"}},
                     {false, "in_hand", {"L1"}},
                     {false, "in_centre", {"J1"}},
                     {true, "free", {"G1"}},
                     {false, "in_hand", {"L2"}},
                     {true, "connected", {"J1", "L2"}}};
        m1.op.del = {{true, "free", {"G1"}}, {true, "free", {"G2"}}};
        m1.op.add = {{true, "in_centre", {"J1"}},
                     {true, "in_hand", {"L1"}},
                     {true, "in_hand", {"L2"}},
                     {true, "grasped", {"G1", "L1"}},
                     {true, "grasped", {"G2", "L2"}}};
        m1.constituents = {{"move_link_to_central", {"L1", "J1", "G2"}},
                           {"take_links_to_move", {"L1", "L2", "J1", "G1", "G2"}}};
        v.push_back(std::move(m1));

        MacroSchema m2;
        m2.op.name = "changeAngle_release";
        m2.op.params = {{"L1", Sort::Link},    {"L2", Sort::Link},
                        {"J1", Sort::Joint},   {"G1", Sort::Gripper},
                        {"G2", Sort::Gripper}, {"A1", Sort::Angle},
                        {"A2", Sort::Angle}};
        m2.op.guards = {{Guard::Kind::NotEqual, "L1", "L2"},
                        {Guard::Kind::NotEqual, "G1", "G2"}};
        m2.op.pre = {{true, "in_centre", {"J1"}},
                     {true, "grasped", {"G1", "L1"}},
                     {true, "grasped", {"G2", "L2"}},
                     {true, "in_hand", {"L1"}},
                     {true, "in_hand", {"L2"}},
                     {false, "free", {"G1"}},
                     {false, "free", {"G2"}},
                     {true, "connected", {"J1", "L1"}},
                     {true, "connected", {"J1", "L2"}},
                     {true, "hasAngle", {"L1", "A2"}}};
        m2.op.del = {{true, "grasped", {"G1", "L1"}},
                     {true, "grasped", {"G2", "L2"}},
                     {true, "in_hand", {"L1"}},
                     {true, "in_hand", {"L2"}}};
        m2.op.add = {{true, "free", {"G1"}}, {true, "free", {"G2"}}};
        m2.op.rotation = Rotation{"L1", "L2", "A1", "A2"};
        m2.constituents = {{"changeAngle", {"L1", "L2", "J1", "A1", "A2", "G1", "G2"}},
                           {"release_links", {"L1", "L2", "J1", "G1", "G2"}}};
        v.push_back(std::move(m2));

        MacroSchema m3;
        m3.op.name = "grasp_changeAngle_release";
        m3.op.params = {{"L1", Sort::Link},  {"L2", Sort::Link},
                        {"J1", Sort::Joint}, {"A1", Sort::Angle},
                        {"A2", Sort::Angle}, {"G1", Sort::Gripper},
                        {"G2", Sort::Gripper}};
        m3.op.guards = {{Guard::Kind::NotEqual, "L1", "L2"},
                        {Guard::Kind::NotEqual, "G1", "G2"}};
        m3.op.pre = {{true, "in_centre", {"J1"}},
                     {true, "free", {"G1"}},
                     {true, "free", {"G2"}},
                     {false, "in_hand", {"L1"}},
                     {false, "in_hand", {"L2"}},
                     {true, "connected", {"J1", "L1"}},
                     {true, "connected", {"J1", "L2"}},
                     {true, "hasAngle", {"L1", "A2"}}};
        m3.op.del = {{true, "grasped", {"G1", "L1"}},
                     {true, "grasped", {"G2", "L2"}},
                     {true, "in_hand", {"L1"}},
                     {true, "in_hand", {"L2"}}};
        m3.op.add = {{true, "free", {"G1"}}, {true, "free", {"G2"}}};
        m3.op.rotation = Rotation{"L1", "L2", "A1", "A2"};
        m3.constituents = {{"take_links_to_move", {"L1", "L2", "J1", "G1", "G2"}},
                           {"changeAngle", {"L1", "L2", "J1", "A1", "A2", "G1", "G2"}},
                           {"release_links", {"L1", "L2", "J1", "G1", "G2"}}};
        v.push_back(std::move(m3));

        return v;
    }();
    return macros;
}

Plan expand(const Plan& macro_plan) {
    const auto& macros = maes_action_set();
    Plan out;
    for (const GroundAction& a : macro_plan) {
        auto it = std::find_if(macros.begin(), macros.end(), [&](const MacroSchema& m) {
            return m.op.name == a.name && m.op.params.size() == a.args.size();
        });
        if (it == macros.end()) {
            throw std::invalid_argument("not a macro action: " + a.name + "/" +
                                        std::to_string(a.args.size()));
        }
        auto value_of = [&](const std::string& param) {
            for (size_t i = 0; i < it->op.params.size(); ++i) {
                if (it->op.params[i].name == param) {
                    return a.args[i];
                }
            }
            throw std::logic_error("unbound macro parameter " + param);
        };
        for (const Constituent& c : it->constituents) {
            GroundAction g;
            g.name = c.schema_name;
            for (const std::string& p : c.arg_params) {
                g.args.push_back(value_of(p));
            }
            g.timestep = static_cast<int>(out.size());
            out.push_back(std::move(g));
        }
    }
    return out;
}

namespace {

void ground_rotations(const MacroSchema& m, const State& s, const Topology& topo,
                      LinkId l1, LinkId l2, JointId j1, GripperId g1, GripperId g2,
                      std::vector<GroundAction>& out) {
    const Angle current = s.angle_of(l1);
    std::vector<Angle> targets = {normalize_angle(current + topo.granularity),
                                  normalize_angle(current - topo.granularity)};
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (Angle a1 : targets) {
        GroundAction g;
        g.name = m.op.name;
        if (m.op.name == "changeAngle_release") {
            g.args = {l1, l2, j1, g1, g2, a1, current};
        } else {
            g.args = {l1, l2, j1, a1, current, g1, g2};
        }
        out.push_back(std::move(g));
    }
}

} // namespace

std::vector<GroundAction> applicable_macro(const State& s, const Topology& topo,
                                           bool mixed) {
    std::vector<GroundAction> out;
    if (mixed) {
        for (const SaesAction& a : applicable_saes(s, topo)) {
            out.push_back(to_ground(a, 0));
        }
    }
    const auto& macros = maes_action_set();

    std::vector<GroundAction> block;
    // linkToCentral_take: joint not centred, links loose, two free grippers.
    for (JointId j1 : topo.joints) {
        if (s.in_centre && *s.in_centre == j1) {
            continue;
        }
        const auto links = topo.links_of(j1);
        for (LinkId l1 : links) {
            if (s.in_hand(l1)) {
                continue;
            }
            for (LinkId l2 : links) {
                if (l1 == l2 || s.in_hand(l2)) {
                    continue;
                }
                for (GripperId g1 : s.free_grippers) {
                    for (GripperId g2 : s.free_grippers) {
                        if (g1 == g2) {
                            continue;
                        }
                        block.push_back(
                            GroundAction{macros[0].op.name, {l1, l2, j1, g1, g2}, 0});
                    }
                }
            }
        }
    }
    std::sort(block.begin(), block.end(),
              [](const GroundAction& a, const GroundAction& b) { return a.args < b.args; });
    out.insert(out.end(), block.begin(), block.end());

    // changeAngle_release: both grasps on links of the centred joint.
    block.clear();
    if (s.in_centre && s.grasps.size() == 2) {
        const JointId j1 = *s.in_centre;
        for (const State::Grasp& a : s.grasps) {
            for (const State::Grasp& b : s.grasps) {
                if (a.gripper == b.gripper) {
                    continue;
                }
                if (a.link == b.link || !topo.connected(j1, a.link) ||
                    !topo.connected(j1, b.link)) {
                    continue;
                }
                ground_rotations(macros[1], s, topo, a.link, b.link, j1, a.gripper,
                                 b.gripper, block);
            }
        }
    }
    std::sort(block.begin(), block.end(),
              [](const GroundAction& a, const GroundAction& b) { return a.args < b.args; });
    out.insert(out.end(), block.begin(), block.end());

    // grasp_changeAngle_release: centred joint, loose links, free grippers.
    block.clear();
    if (s.in_centre) {
        const JointId j1 = *s.in_centre;
        const auto links = topo.links_of(j1);
        for (LinkId l1 : links) {
            if (s.in_hand(l1)) {
                continue;
            }
            for (LinkId l2 : links) {
                if (l1 == l2 || s.in_hand(l2)) {
                    continue;
                }
                for (GripperId g1 : s.free_grippers) {
                    for (GripperId g2 : s.free_grippers) {
                        if (g1 == g2) {
                            continue;
                        }
                        ground_rotations(macros[2], s, topo, l1, l2, j1, g1, g2, block);
                    }
                }
            }
        }
    }
    std::sort(block.begin(), block.end(),
              [](const GroundAction& a, const GroundAction& b) { return a.args < b.args; });
    out.insert(out.end(), block.begin(), block.end());
    return out;
}

State apply_macro(const State& s, const Topology& topo, const GroundAction& a) {
    for (const MacroSchema& m : maes_action_set()) {
        if (m.op.name == a.name && m.op.params.size() == a.args.size()) {
            return apply_schema(m.op, a.args, s, topo);
        }
    }
    // Mixed configurations fall back to the elementary operators.
    if (auto sa = saes_from_ground(a)) {
        return apply_saes(s, topo, *sa);
    }
    throw std::invalid_argument("unknown macro action " + a.name);
}

} // namespace artiplan
