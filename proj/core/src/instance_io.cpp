#include "artiplan/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace artiplan {

namespace {

// Known predicates and their arities.
const std::map<std::string_view, size_t> kPredicates = {
    {"joint", 1},    {"link", 1},      {"angle", 1},   {"gripper", 1},
    {"isLinked", 2}, {"connected", 2}, {"hasAngle", 3}, {"goal", 2},
    {"in_centre", 2}, {"free", 2},     {"in_hand", 2}, {"grasped", 3},
    {"time", 1},
};

struct Lexer {
    std::string_view text;
    size_t i = 0;
    int line = 1;
    int col = 1;

    SourcePos pos() const { return {line, col}; }

    void advance() {
        if (i < text.size()) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    }

    void skip_space_and_comments() {
        while (i < text.size()) {
            const char c = text[i];
            if (c == '%') {
                while (i < text.size() && text[i] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    bool eof() {
        skip_space_and_comments();
        return i >= text.size();
    }

    char peek() const { return i < text.size() ? text[i] : '\0'; }

    void expect(char c, const char* what) {
        skip_space_and_comments();
        if (peek() != c) {
            throw ParseError(pos(), std::string("expected '") + c + "' " + what);
        }
        advance();
    }

    bool consume(char c) {
        skip_space_and_comments();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_space_and_comments();
        SourcePos p = pos();
        std::string out;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            out.push_back(text[i]);
            advance();
        }
        if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) {
            throw ParseError(p, "expected an identifier");
        }
        return out;
    }

    int integer() {
        skip_space_and_comments();
        SourcePos p = pos();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError(p, "expected an integer");
        }
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000000L) {
                throw ParseError(p, "integer out of range");
            }
            advance();
        }
        return static_cast<int>(neg ? -v : v);
    }
};

struct Arg {
    int value = 0;
    bool is_interval = false;
    int hi = 0;
    bool hi_is_horizon = false; // upper bound written as the horizon constant
};

Arg parse_arg(Lexer& lx) {
    Arg a;
    lx.skip_space_and_comments();
    a.value = lx.integer();
    lx.skip_space_and_comments();
    if (lx.peek() == '.' && lx.i + 1 < lx.text.size() && lx.text[lx.i + 1] == '.') {
        lx.advance();
        lx.advance();
        a.is_interval = true;
        lx.skip_space_and_comments();
        if (std::isdigit(static_cast<unsigned char>(lx.peek())) || lx.peek() == '-') {
            a.hi = lx.integer();
        } else {
            SourcePos p = lx.pos();
            if (lx.ident() != "timemax") {
                throw ParseError(p, "interval upper bound must be an integer or timemax");
            }
            a.hi_is_horizon = true;
        }
    }
    return a;
}

void validate_initial_fluents(const Instance& inst) {
    std::map<GripperId, LinkId> grasp_by_gripper;
    std::map<LinkId, GripperId> gripper_by_link;
    std::set<GripperId> free_at_zero;
    std::set<LinkId> in_hand_at_zero;
    std::optional<JointId> centred;

    for (const Fact& f : inst.facts) {
        if (f.pred == "grasped" && f.args[2] == 0) {
            const GripperId g = f.args[0];
            const LinkId l = f.args[1];
            auto [git, gnew] = grasp_by_gripper.emplace(g, l);
            if (!gnew && git->second != l) {
                throw ParseError(f.pos, "gripper " + std::to_string(g) +
                                            " grasps two links at time 0");
            }
            auto [lit, lnew] = gripper_by_link.emplace(l, g);
            if (!lnew && lit->second != g) {
                throw ParseError(f.pos, "link " + std::to_string(l) +
                                            " grasped by two grippers at time 0");
            }
        } else if (f.pred == "free" && f.args[1] == 0) {
            free_at_zero.insert(f.args[0]);
        } else if (f.pred == "in_hand" && f.args[1] == 0) {
            in_hand_at_zero.insert(f.args[0]);
        } else if (f.pred == "in_centre" && f.args[1] == 0) {
            if (centred && *centred != f.args[0]) {
                throw ParseError(f.pos, "two joints centred at time 0");
            }
            centred = f.args[0];
        }
    }
    for (const Fact& f : inst.facts) {
        if (f.pred == "free" && f.args[1] == 0 && grasp_by_gripper.count(f.args[0])) {
            throw ParseError(f.pos, "gripper " + std::to_string(f.args[0]) +
                                        " declared both free and grasping at time 0");
        }
        if (f.pred == "in_hand" && f.args[1] == 0 && !gripper_by_link.count(f.args[0])) {
            throw ParseError(f.pos, "link " + std::to_string(f.args[0]) +
                                        " in hand without a matching grasp at time 0");
        }
    }
}

} // namespace

std::string to_string(const Fact& f) {
    std::string out = f.pred + "(";
    for (size_t i = 0; i < f.args.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(f.args[i]);
    }
    return out + ")";
}

bool Instance::time_declared(int t) const {
    if (!times) {
        return t >= 0;
    }
    for (const TimeInterval& iv : *times) {
        if (t >= iv.lo && (!iv.hi || t <= *iv.hi)) {
            return true;
        }
    }
    return false;
}

std::vector<int> Instance::declared(std::string_view pred) const {
    std::vector<int> out;
    for (const Fact& f : facts) {
        if (f.pred == pred && f.args.size() == 1) {
            out.push_back(f.args[0]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<int, Angle>> Instance::goals() const {
    std::vector<std::pair<int, Angle>> out;
    for (const Fact& f : facts) {
        if (f.pred == "goal") {
            out.emplace_back(f.args[0], f.args[1]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Topology Instance::topology() const {
    Topology t;
    t.scenario = scenario;
    t.joints = joints();
    t.granularity = granularity;
    if (scenario == Encoding::Sas) {
        t.links = t.joints;
        std::set<std::pair<int, int>> adj;
        adj.emplace(0, 1);
        adj.emplace(1, 0);
        for (const Fact& f : facts) {
            if (f.pred == "isLinked") {
                adj.emplace(f.args[0], f.args[1]);
                adj.emplace(f.args[1], f.args[0]);
            }
        }
        t.linked_joints.assign(adj.begin(), adj.end());
    } else {
        t.links = links();
        t.grippers = grippers();
        std::set<std::pair<int, int>> con;
        for (const Fact& f : facts) {
            if (f.pred == "connected") {
                con.emplace(f.args[0], f.args[1]);
            }
        }
        t.joint_links.assign(con.begin(), con.end());
    }
    t.link_lengths.assign(t.elements().size(), 1.0);
    return t;
}

State Instance::initial_state() const {
    const Topology topo = topology();
    State s;
    std::set<int> seen;
    for (const Fact& f : facts) {
        if (f.pred == "hasAngle" && f.args[2] == 0) {
            if (!seen.insert(f.args[0]).second) {
                throw std::runtime_error("element " + std::to_string(f.args[0]) +
                                         " has more than one initial angle");
            }
            s.angles.push_back({f.args[0], f.args[1]});
        }
    }
    std::sort(s.angles.begin(), s.angles.end());
    for (int e : topo.elements()) {
        if (!seen.count(e)) {
            throw std::runtime_error("element " + std::to_string(e) +
                                     " has no initial angle");
        }
    }
    if (scenario != Encoding::Sas) {
        std::set<GripperId> grasping;
        for (const Fact& f : facts) {
            if (f.pred == "grasped" && f.args[2] == 0) {
                if (grasping.insert(f.args[0]).second) {
                    s.grasps.push_back({f.args[0], f.args[1]});
                }
            } else if (f.pred == "in_centre" && f.args[1] == 0) {
                s.in_centre = f.args[0];
            }
        }
        std::sort(s.grasps.begin(), s.grasps.end());
        for (GripperId g : topo.grippers) {
            if (!grasping.count(g)) {
                s.free_grippers.push_back(g);
            }
        }
    }
    return s;
}

bool Instance::goal_satisfied(const State& s) const {
    for (const auto& [element, angle] : goals()) {
        bool found = false;
        for (const auto& e : s.angles) {
            if (e.element == element) {
                found = e.degrees == angle;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

bool Instance::operator==(const Instance& o) const {
    auto canon = [](const Instance& x) {
        std::vector<std::pair<std::string, std::vector<int>>> fs;
        fs.reserve(x.facts.size());
        for (const Fact& f : x.facts) {
            fs.emplace_back(f.pred, f.args);
        }
        std::sort(fs.begin(), fs.end());
        return fs;
    };
    return scenario == o.scenario && granularity == o.granularity &&
           horizon_limit == o.horizon_limit && times == o.times &&
           canon(*this) == canon(o);
}

Instance parse_instance(std::string_view text) {
    Lexer lx{text};
    Instance inst;
    bool granularity_seen = false;
    bool saw_is_linked = false;
    bool saw_extended = false;
    SourcePos first_mix_pos{};

    while (!lx.eof()) {
        SourcePos start = lx.pos();
        if (lx.consume('#')) {
            SourcePos p = lx.pos();
            if (lx.ident() != "const") {
                throw ParseError(p, "expected #const");
            }
            std::string name = lx.ident();
            lx.expect('=', "in #const directive");
            int value = lx.integer();
            lx.expect('.', "after #const directive");
            if (name == "granularity") {
                if (granularity_seen) {
                    throw ParseError(start, "duplicate #const granularity");
                }
                if (value <= 0 || value > 360 || 360 % value != 0) {
                    throw ParseError(start, "granularity must divide 360");
                }
                inst.granularity = value;
                granularity_seen = true;
            } else if (name == "timemax") {
                inst.horizon_limit = value;
            } else {
                throw ParseError(start, "unknown constant '" + name + "'");
            }
            continue;
        }

        std::string pred = lx.ident();
        auto it = kPredicates.find(pred);
        if (it == kPredicates.end()) {
            throw ParseError(start, "unknown predicate '" + pred + "'");
        }
        lx.expect('(', "after predicate name");
        std::vector<Arg> args;
        args.push_back(parse_arg(lx));
        while (lx.consume(',')) {
            args.push_back(parse_arg(lx));
        }
        lx.expect(')', "to close the argument list");
        lx.expect('.', "after fact");

        if (args.size() != it->second) {
            throw ParseError(start, pred + " expects " + std::to_string(it->second) +
                                        " argument(s), got " + std::to_string(args.size()));
        }
        for (size_t k = 0; k < args.size(); ++k) {
            if (args[k].is_interval && (args.size() != 1)) {
                throw ParseError(start, "interval arguments are only allowed in "
                                        "single-argument facts");
            }
        }

        if (pred == "time") {
            Instance::TimeInterval iv;
            iv.lo = args[0].value;
            if (args[0].is_interval) {
                if (!args[0].hi_is_horizon) {
                    iv.hi = args[0].hi;
                }
            } else {
                iv.hi = args[0].value;
            }
            if (!inst.times) {
                inst.times.emplace();
            }
            inst.times->push_back(iv);
            continue;
        }

        if (pred == "isLinked") {
            saw_is_linked = true;
            if (saw_extended) {
                throw ParseError(start, "isLinked and connected/link facts cannot "
                                        "be mixed in one instance");
            }
        }
        if (pred == "connected" || pred == "link") {
            saw_extended = true;
            first_mix_pos = start;
            if (saw_is_linked) {
                throw ParseError(start, "isLinked and connected/link facts cannot "
                                        "be mixed in one instance");
            }
        }

        if (args[0].is_interval) {
            const Arg& a = args[0];
            if (a.hi_is_horizon) {
                throw ParseError(start, "timemax is only allowed in time intervals");
            }
            for (int v = a.value; v <= a.hi; ++v) {
                inst.facts.push_back(Fact{pred, {v}, start});
            }
        } else {
            std::vector<int> vals;
            vals.reserve(args.size());
            for (const Arg& a : args) {
                vals.push_back(a.value);
            }
            inst.facts.push_back(Fact{pred, std::move(vals), start});
        }
    }

    if (!granularity_seen) {
        throw ParseError(lx.pos(), "no granularity declared");
    }
    inst.scenario = saw_extended ? Encoding::Saes : Encoding::Sas;
    validate_initial_fluents(inst);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "#const granularity = " << inst.granularity << ".\n";
    if (inst.horizon_limit) {
        out << "#const timemax = " << *inst.horizon_limit << ".\n";
    }

    std::vector<std::string> lines;
    for (const Fact& f : inst.facts) {
        lines.push_back(to_string(f) + ".");
    }
    if (inst.times) {
        for (const Instance::TimeInterval& iv : *inst.times) {
            std::string hi = iv.hi ? std::to_string(*iv.hi) : std::string("timemax");
            if (iv.hi && *iv.hi == iv.lo) {
                lines.push_back("time(" + std::to_string(iv.lo) + ").");
            } else {
                lines.push_back("time(" + std::to_string(iv.lo) + ".." + hi + ").");
            }
        }
    }
    // Canonical order: predicate name, then arguments numerically. The
    // rendered text sorts the same way because arities are fixed per
    // predicate; sort on a parsed key to keep numbers numeric.
    std::sort(lines.begin(), lines.end(), [](const std::string& a, const std::string& b) {
        auto key = [](const std::string& s) {
            std::pair<std::string, std::vector<long>> k;
            size_t p = s.find('(');
            k.first = s.substr(0, p);
            long v = 0;
            bool in_num = false;
            bool neg = false;
            for (size_t i = p; i < s.size(); ++i) {
                const char c = s[i];
                if (c == '-') {
                    neg = true;
                } else if (std::isdigit(static_cast<unsigned char>(c))) {
                    in_num = true;
                    v = v * 10 + (c - '0');
                } else {
                    if (in_num) {
                        k.second.push_back(neg ? -v : v);
                    }
                    in_num = false;
                    neg = false;
                    v = 0;
                }
            }
            return k;
        };
        return key(a) < key(b);
    });
    for (const std::string& l : lines) {
        out << l << "\n";
    }
    return out.str();
}

Instance make_instance(const Topology& topology, const State& initial,
                       const std::vector<std::pair<int, Angle>>& goals) {
    Instance inst;
    inst.scenario = topology.scenario == Encoding::Sas ? Encoding::Sas : Encoding::Saes;
    inst.granularity = topology.granularity;

    auto fact = [&inst](std::string pred, std::vector<int> args) {
        inst.facts.push_back(Fact{std::move(pred), std::move(args), {}});
    };
    for (JointId j : topology.joints) {
        fact("joint", {j});
    }
    for (Angle a : angles_for_granularity(topology.granularity)) {
        fact("angle", {a});
    }
    if (topology.scenario == Encoding::Sas) {
        for (const auto& [a, b] : topology.linked_joints) {
            if (a < b && a > 0) {
                fact("isLinked", {a, b});
            }
        }
    } else {
        for (LinkId l : topology.links) {
            fact("link", {l});
        }
        for (const auto& [j, l] : topology.joint_links) {
            fact("connected", {j, l});
        }
        for (GripperId g : topology.grippers) {
            fact("gripper", {g});
        }
        for (GripperId g : initial.free_grippers) {
            fact("free", {g, 0});
        }
        for (const State::Grasp& gr : initial.grasps) {
            fact("grasped", {gr.gripper, gr.link, 0});
            fact("in_hand", {gr.link, 0});
        }
        if (initial.in_centre) {
            fact("in_centre", {*initial.in_centre, 0});
        }
    }
    for (const auto& e : initial.angles) {
        fact("hasAngle", {e.element, e.degrees, 0});
    }
    for (const auto& [element, angle] : goals) {
        fact("goal", {element, angle});
    }
    return inst;
}

namespace {

// Plan atom arities, timestep included.
const std::map<std::string, std::vector<size_t>> kActionArities = {
    {"changeAngle", {5, 8}},
    {"move_link_to_central", {4}},
    {"take_links_to_move", {6}},
    {"release_links", {6}},
    {"linkToCentral_take", {6}},
    {"changeAngle_release", {8}},
    {"grasp_changeAngle_release", {8}},
};

bool sas_style(const GroundAction& a) {
    return a.name == "changeAngle" && a.args.size() == 4;
}

} // namespace

Plan parse_plan(std::string_view text) {
    Lexer lx{text};
    std::vector<std::pair<int, GroundAction>> atoms;
    while (!lx.eof()) {
        SourcePos start = lx.pos();
        std::string name = lx.ident();
        auto it = kActionArities.find(name);
        if (it == kActionArities.end()) {
            throw ParseError(start, "unknown action '" + name + "'");
        }
        lx.expect('(', "after action name");
        std::vector<int> args;
        args.push_back(lx.integer());
        while (lx.consume(',')) {
            args.push_back(lx.integer());
        }
        lx.expect(')', "to close the argument list");
        lx.consume('.');
        if (std::find(it->second.begin(), it->second.end(), args.size()) ==
            it->second.end()) {
            throw ParseError(start, name + " has wrong arity " +
                                        std::to_string(args.size()));
        }
        GroundAction a;
        a.name = std::move(name);
        int t = args.back();
        args.pop_back();
        a.args = std::move(args);
        atoms.emplace_back(t, std::move(a));
    }
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Plan plan;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0 && atoms[i].first != atoms[i - 1].first + 1) {
            throw ParseError({}, "plan timesteps must be consecutive (step " +
                                     std::to_string(atoms[i].first) + " after " +
                                     std::to_string(atoms[i - 1].first) + ")");
        }
        GroundAction a = std::move(atoms[i].second);
        a.timestep = static_cast<int>(i);
        plan.push_back(std::move(a));
    }
    return plan;
}

std::string serialize_plan(const Plan& plan) {
    std::ostringstream out;
    for (const GroundAction& a : plan) {
        out << a.name << "(";
        for (int v : a.args) {
            out << v << ",";
        }
        out << (sas_style(a) ? a.timestep + 1 : a.timestep) << ")\n";
    }
    return out.str();
}

} // namespace artiplan
