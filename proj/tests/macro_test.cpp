#include <doctest.h>

#include <random>

#include "artiplan/macro.hpp"
#include "artiplan/validator.hpp"
#include "support/oracles.hpp"

using namespace artiplan;
namespace ts = artiplan::testsupport;

namespace {

const OperatorSchema& saes_op(const std::string& name) {
    for (const OperatorSchema& s : saes_schemas()) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::logic_error("unknown operator " + name);
}

const MacroSchema& macro(const std::string& name) {
    for (const MacroSchema& m : maes_action_set()) {
        if (m.op.name == name) {
            return m;
        }
    }
    throw std::logic_error("unknown macro " + name);
}

} // namespace

TEST_CASE("composing centering with grasping reproduces the first macro") {
    const MacroSchema composed =
        compose(saes_op("move_link_to_central"), saes_op("take_links_to_move"));

    // the established centre precondition is consumed, the negated one stays
    const auto pre = pre_set_strings(composed.op);
    CHECK(pre == std::vector<std::string>{
                     "G1<>G2", "L1<>L2", "connected(J1,L1)", "connected(J1,L2)",
                     "free(G1)", "free(G2)", "gripper(G1)", "gripper(G2)", "joint(J1)",
                     "link(L1)", "link(L2)", "not in_centre(J1)", "not in_hand(L1)",
                     "not in_hand(L2)"});
    CHECK(effect_set_strings(composed.op.del) ==
          std::vector<std::string>{"free(G1)", "free(G2)"});
    CHECK(effect_set_strings(composed.op.add) ==
          std::vector<std::string>{"grasped(G1,L1)", "grasped(G2,L2)", "in_centre(J1)",
                                   "in_hand(L1)", "in_hand(L2)"});

    const MacroSchema& m1 = macro("linkToCentral_take");
    CHECK(pre_set_strings(composed.op) == pre_set_strings(m1.op));
    CHECK(effect_set_strings(composed.op.del) == effect_set_strings(m1.op.del));
    CHECK(effect_set_strings(composed.op.add) == effect_set_strings(m1.op.add));
    CHECK(composed.constituents == m1.constituents);
}

TEST_CASE("composing with a no-op leaves the operator unchanged") {
    OperatorSchema noop;
    noop.name = "noop";
    const OperatorSchema& take = saes_op("take_links_to_move");
    const MacroSchema composed = compose(take, noop);
    CHECK(pre_set_strings(composed.op) == pre_set_strings(take));
    CHECK(effect_set_strings(composed.op.del) == effect_set_strings(take.del));
    CHECK(effect_set_strings(composed.op.add) == effect_set_strings(take.add));
    CHECK(composed.op.rotation == take.rotation);
}

TEST_CASE("iterated composition yields the grasp-rotate-release macro") {
    const MacroSchema composed = compose(
        compose(saes_op("take_links_to_move"), saes_op("changeAngle")),
        saes_op("release_links"));
    const MacroSchema& m3 = macro("grasp_changeAngle_release");
    CHECK(pre_set_strings(composed.op) == pre_set_strings(m3.op));
    CHECK(effect_set_strings(composed.op.del) == effect_set_strings(m3.op.del));
    CHECK(effect_set_strings(composed.op.add) == effect_set_strings(m3.op.add));
    CHECK(composed.op.rotation == m3.op.rotation);
    CHECK(composed.constituents == m3.constituents);
}

TEST_CASE("the second macro is the rotate-release composition") {
    const MacroSchema composed = compose(saes_op("changeAngle"), saes_op("release_links"));
    const MacroSchema& m2 = macro("changeAngle_release");
    CHECK(pre_set_strings(composed.op) == pre_set_strings(m2.op));
    CHECK(effect_set_strings(composed.op.del) == effect_set_strings(m2.op.del));
    CHECK(effect_set_strings(composed.op.add) == effect_set_strings(m2.op.add));
}

TEST_CASE("composition is associative on the three-operator chain") {
    const auto left = compose(
        compose(saes_op("take_links_to_move"), saes_op("changeAngle")),
        saes_op("release_links"));
    const auto inner = compose(saes_op("changeAngle"), saes_op("release_links"));
    const auto right = compose(lift(saes_op("take_links_to_move")), inner.op);
    CHECK(pre_set_strings(left.op) == pre_set_strings(right.op));
    CHECK(effect_set_strings(left.op.del) == effect_set_strings(right.op.del));
    CHECK(effect_set_strings(left.op.add) == effect_set_strings(right.op.add));
    CHECK(left.op.rotation == right.op.rotation);
}

TEST_CASE("soundness of operator pairs") {
    SUBCASE("centering then grasping is sound") {
        CHECK(check_soundness(saes_op("move_link_to_central"),
                              saes_op("take_links_to_move")));
    }
    SUBCASE("releasing then rotating is unsound: the grasp is gone") {
        const Soundness s =
            check_soundness(saes_op("release_links"), saes_op("changeAngle"));
        CHECK(!s);
        CHECK(to_string(s.witness) == "grasped(G1,L1)");
    }
    SUBCASE("a delete-free operator is sound against itself") {
        const OperatorSchema& rotate = saes_op("changeAngle");
        REQUIRE(rotate.del.empty());
        CHECK(check_soundness(rotate, rotate));
    }
    SUBCASE("strict composition rejects unsound pairs") {
        CHECK_THROWS_AS(
            compose(saes_op("release_links"), saes_op("changeAngle"), {}, true),
            std::invalid_argument);
    }
}

TEST_CASE("macro effect sets coincide where expected") {
    const MacroSchema& m2 = macro("changeAngle_release");
    const MacroSchema& m3 = macro("grasp_changeAngle_release");
    CHECK(effect_set_strings(m2.op.del) == effect_set_strings(m3.op.del));
    CHECK(effect_set_strings(m2.op.add) == effect_set_strings(m3.op.add));
    CHECK(m2.op.rotation == m3.op.rotation);
}

TEST_CASE("macros demand a single granularity step") {
    const Instance inst = parse_instance(ts::read_fixture("extended_5link.lp"));
    const Topology topo = inst.topology();
    const State s = inst.initial_state(); // link 4 at 60, joint 3 centred
    const MacroSchema& m3 = macro("grasp_changeAngle_release");
    CHECK(!first_unsatisfied(m3.op, {4, 3, 3, 0, 60, 0, 1}, s, topo));
    CHECK(first_unsatisfied(m3.op, {4, 3, 3, 180, 60, 0, 1}, s, topo)); // two steps away
    for (const GroundAction& a : applicable_macro(s, topo)) {
        const MacroSchema& m = macro(a.name);
        CHECK(!first_unsatisfied(m.op, a.args, s, topo));
    }
}

TEST_CASE("the four-macro plan expands to ten elementary actions") {
    const Instance inst = parse_instance(ts::read_fixture("extended_5link.lp"));
    const Topology topo = inst.topology();
    const Plan macro_plan = parse_plan(ts::read_fixture("extended_5link_maes_plan.txt"));

    State macro_final = inst.initial_state();
    for (const GroundAction& a : macro_plan) {
        macro_final = apply_macro(macro_final, topo, a);
    }
    CHECK(inst.goal_satisfied(macro_final));

    const Plan elementary = expand(macro_plan);
    CHECK(elementary.size() == 10);
    CHECK(plan_well_formed(elementary));
    const ValidationReport report = validate(inst, elementary, Encoding::Saes);
    CHECK(report.valid());
    CHECK(report.trace.back() == macro_final);
}

TEST_CASE("expanding an empty plan gives an empty plan") {
    CHECK(expand({}).empty());
}

TEST_CASE("macro application equals its elementary sequence everywhere") {
    const Topology topo = Topology::extended_chain(3, 90, {1, 2});
    State initial = State::from_angles(topo, {0, 90, 180});
    for (const State& s : ts::reachable_states(initial, topo, Encoding::Saes, 6)) {
        for (const GroundAction& a : applicable_macro(s, topo)) {
            State via_macro = apply_macro(s, topo, a);
            State via_sequence = s;
            GroundAction one = a;
            one.timestep = 0;
            for (const GroundAction& g : expand({one})) {
                auto sa = saes_from_ground(g);
                REQUIRE(sa);
                REQUIRE(!saes_inapplicable_reason(via_sequence, topo, *sa));
                via_sequence = apply_saes(via_sequence, topo, *sa);
            }
            CHECK(via_macro == via_sequence);
        }
    }
}

TEST_CASE("random macro plans expand into valid elementary plans") {
    std::mt19937_64 rng(77);
    const Topology topo = Topology::extended_chain(4, 90, {1, 2});
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Angle> degs(4);
        for (Angle& d : degs) {
            d = static_cast<Angle>(rng() % 4) * 90;
        }
        State s = State::from_angles(topo, degs);
        const State initial = s;
        Plan macro_plan;
        const int len = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < len; ++t) {
            const auto actions = applicable_macro(s, topo);
            if (actions.empty()) {
                break;
            }
            GroundAction a = actions[rng() % actions.size()];
            a.timestep = t;
            s = apply_macro(s, topo, a);
            macro_plan.push_back(std::move(a));
        }
        std::vector<std::pair<int, Angle>> goals;
        for (int e : topo.elements()) {
            goals.emplace_back(e, s.angle_of(e));
        }
        const Instance inst = make_instance(topo, initial, goals);
        CHECK(validate(inst, macro_plan, Encoding::Maes).valid());
        CHECK(validate(inst, expand(macro_plan), Encoding::Saes).valid());
    }
}
