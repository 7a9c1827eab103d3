#include "fluent_sim.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace artiplan::testsupport {

namespace {

// Admissible one-step change from ai to a, transcribed case by case:
// modular +granularity in either direction plus the two explicit 0/360-g
// wrap cases.
bool ok_step(int g, int a, int ai) {
    if ((a + g) % 360 == ai % 360 && a < ai) {
        return true;
    }
    if ((ai + g) % 360 == a % 360 && a > ai) {
        return true;
    }
    if (ai == 0 && a == 360 - g) {
        return true;
    }
    if (a == 0 && ai == 360 - g) {
        return true;
    }
    return false;
}

// The propagated-angle formula: |(Ac + (A - Ap)) + 360| modulo 360.
int propagated(int ac, int a, int ap) {
    return std::abs(ac + (a - ap) + 360) % 360;
}

std::map<int, int> angle_map(const FactDb& db) {
    std::map<int, int> m;
    for (const auto& [e, a] : db.has_angle) {
        if (m.count(e)) {
            throw std::logic_error("two angles for one element in the fact set");
        }
        m[e] = a;
    }
    return m;
}

// Directional propagation shared by the extended models: the acted element
// takes `target`; elements beyond it on the side away from `held` take the
// propagated angle when it is a declared angle, and keep their old angle
// otherwise (the frame rule fires when no affected fact exists).
std::set<std::pair<int, int>> rotate_angles(const FactDb& db, int acted, int held,
                                            int target, int current) {
    std::set<std::pair<int, int>> next;
    for (const auto& [e, old] : angle_map(db)) {
        if (e == acted) {
            next.emplace(e, target);
            continue;
        }
        const bool affected_side =
            (e > acted && acted > held) || (e < acted && acted < held);
        if (affected_side) {
            const int an = propagated(old, target, current);
            next.emplace(e, db.angles.count(an) ? an : old);
        } else {
            next.emplace(e, old);
        }
    }
    return next;
}

} // namespace

FactDb to_facts(const Topology& topo, const State& s) {
    FactDb db;
    db.granularity = topo.granularity;
    for (Angle a : angles_for_granularity(topo.granularity)) {
        db.angles.insert(a);
    }
    if (topo.scenario == Encoding::Sas) {
        db.joints.insert(0);
        for (JointId j : topo.joints) {
            db.joints.insert(j);
        }
        for (const auto& p : topo.linked_joints) {
            db.is_linked.insert(p);
        }
        db.has_angle.emplace(0, 0);
    } else {
        for (JointId j : topo.joints) {
            db.joints.insert(j);
        }
        for (LinkId l : topo.links) {
            db.links.insert(l);
        }
        for (GripperId g : topo.grippers) {
            db.grippers.insert(g);
        }
        for (const auto& p : topo.joint_links) {
            db.connected.insert(p);
        }
    }
    for (const auto& e : s.angles) {
        db.has_angle.emplace(e.element, e.degrees);
    }
    for (const auto& g : s.grasps) {
        db.grasped.emplace(g.gripper, g.link);
        db.in_hand.insert(g.link);
    }
    for (GripperId g : s.free_grippers) {
        db.free_grippers.insert(g);
    }
    db.centre = s.in_centre;
    return db;
}

State to_state(const FactDb& db, const Topology& topo) {
    State s;
    for (const auto& [e, a] : angle_map(db)) {
        if (topo.scenario == Encoding::Sas && e == 0) {
            continue;
        }
        s.angles.push_back({e, a});
    }
    for (const auto& [g, l] : db.grasped) {
        s.grasps.push_back({g, l});
    }
    for (GripperId g : db.free_grippers) {
        s.free_grippers.push_back(g);
    }
    s.in_centre = db.centre;
    return s;
}

namespace {

bool sas_selectable(const FactDb& db, const GroundAction& a) {
    if (a.name != "changeAngle" || a.args.size() != 4) {
        return false;
    }
    const int j1 = a.args[0], j2 = a.args[1], target = a.args[2], ai = a.args[3];
    return db.joints.count(j1) && db.joints.count(j2) && j1 > j2 &&
           db.angles.count(target) && db.has_angle.count({j1, ai}) && target != ai &&
           db.is_linked.count({j1, j2}) && ok_step(db.granularity, target, ai);
}

FactDb sas_step(const FactDb& db, const GroundAction& a) {
    const int j1 = a.args[0], target = a.args[2], ap = a.args[3];
    FactDb next = db;
    next.has_angle.clear();
    for (const auto& [j, ac] : angle_map(db)) {
        if (j == j1) {
            next.has_angle.emplace(j, target);
        } else if (j > j1) {
            const int an = propagated(ac, target, ap);
            next.has_angle.emplace(j, db.angles.count(an) ? an : ac);
        } else {
            next.has_angle.emplace(j, ac);
        }
    }
    return next;
}

bool saes_selectable(const FactDb& db, const GroundAction& a) {
    const auto& v = a.args;
    if (a.name == "move_link_to_central" && v.size() == 3) {
        const int l1 = v[0], j1 = v[1], g2 = v[2];
        return db.links.count(l1) && db.joints.count(j1) && db.grippers.count(g2) &&
               db.connected.count({j1, l1}) && db.free_grippers.count(g2) &&
               !db.in_hand.count(l1) && db.centre != std::optional<int>(j1);
    }
    if (a.name == "take_links_to_move" && v.size() == 5) {
        const int l1 = v[0], l2 = v[1], j1 = v[2], g1 = v[3], g2 = v[4];
        return db.links.count(l1) && db.links.count(l2) && db.joints.count(j1) &&
               db.grippers.count(g1) && db.grippers.count(g2) &&
               db.centre == std::optional<int>(j1) && db.free_grippers.count(g1) &&
               db.free_grippers.count(g2) && !db.in_hand.count(l1) &&
               !db.in_hand.count(l2) && db.connected.count({j1, l1}) &&
               db.connected.count({j1, l2}) && l1 != l2 && g1 != g2;
    }
    if (a.name == "changeAngle" && v.size() == 7) {
        const int l1 = v[0], l2 = v[1], j1 = v[2], a1 = v[3], a2 = v[4], g1 = v[5],
                  g2 = v[6];
        return db.links.count(l1) && db.links.count(l2) && db.joints.count(j1) &&
               db.angles.count(a1) && db.angles.count(a2) && db.grippers.count(g1) &&
               db.grippers.count(g2) && db.centre == std::optional<int>(j1) &&
               db.grasped.count({g1, l1}) && db.grasped.count({g2, l2}) &&
               db.in_hand.count(l1) && db.in_hand.count(l2) &&
               !db.free_grippers.count(g1) && !db.free_grippers.count(g2) &&
               db.connected.count({j1, l1}) && db.connected.count({j1, l2}) &&
               db.has_angle.count({l1, a2}) && l1 != l2 && g1 != g2 &&
               ok_step(db.granularity, a1, a2);
    }
    if (a.name == "release_links" && v.size() == 5) {
        const int l1 = v[0], l2 = v[1], j1 = v[2], g1 = v[3], g2 = v[4];
        return db.links.count(l1) && db.links.count(l2) && db.joints.count(j1) &&
               db.grippers.count(g1) && db.grippers.count(g2) &&
               db.grasped.count({g2, l2}) && db.grasped.count({g1, l1}) &&
               db.in_hand.count(l1) && db.in_hand.count(l2) &&
               !db.free_grippers.count(g1) && !db.free_grippers.count(g2) &&
               db.connected.count({j1, l1}) && db.connected.count({j1, l2}) &&
               l1 != l2 && g1 != g2;
    }
    return false;
}

FactDb saes_step(const FactDb& db, const GroundAction& a) {
    const auto& v = a.args;
    FactDb next = db;
    if (a.name == "move_link_to_central") {
        next.centre = v[1];
        return next;
    }
    if (a.name == "take_links_to_move") {
        const int l1 = v[0], l2 = v[1], g1 = v[3], g2 = v[4];
        next.in_hand.insert(l1);
        next.in_hand.insert(l2);
        next.grasped.emplace(g1, l1);
        next.grasped.emplace(g2, l2);
        next.free_grippers.erase(g1); // frame rule does not propagate them
        next.free_grippers.erase(g2);
        return next;
    }
    if (a.name == "changeAngle") {
        const int l1 = v[0], l2 = v[1], a1 = v[3], a2 = v[4];
        next.has_angle = rotate_angles(db, l1, l2, a1, a2);
        return next;
    }
    if (a.name == "release_links") {
        const int l1 = v[0], l2 = v[1], g1 = v[3], g2 = v[4];
        next.free_grippers.insert(g1);
        next.free_grippers.insert(g2);
        next.in_hand.erase(l1);
        next.in_hand.erase(l2);
        next.grasped.erase({g1, l1});
        next.grasped.erase({g2, l2});
        return next;
    }
    throw std::logic_error("not an extended-model action: " + a.name);
}

bool maes_selectable(const FactDb& db, const GroundAction& a) {
    const auto& v = a.args;
    if (a.name == "linkToCentral_take" && v.size() == 5) {
        const int l1 = v[0], l2 = v[1], j1 = v[2], g1 = v[3], g2 = v[4];
        return db.links.count(l1) && db.links.count(l2) && db.joints.count(j1) &&
               db.grippers.count(g1) && db.grippers.count(g2) &&
               db.free_grippers.count(g1) && db.free_grippers.count(g2) &&
               db.centre != std::optional<int>(j1) && !db.in_hand.count(l1) &&
               !db.in_hand.count(l2) && l1 != l2 && g1 != g2 &&
               db.connected.count({j1, l1}) && db.connected.count({j1, l2});
    }
    if (a.name == "changeAngle_release" && v.size() == 7) {
        const int l1 = v[0], l2 = v[1], j1 = v[2], g1 = v[3], g2 = v[4], a1 = v[5],
                  a2 = v[6];
        return db.links.count(l1) && db.links.count(l2) && db.joints.count(j1) &&
               db.grippers.count(g1) && db.grippers.count(g2) && db.angles.count(a1) &&
               db.angles.count(a2) && db.centre == std::optional<int>(j1) &&
               !db.free_grippers.count(g1) && !db.free_grippers.count(g2) && l1 != l2 &&
               g1 != g2 && db.connected.count({j1, l1}) && db.connected.count({j1, l2}) &&
               db.grasped.count({g1, l1}) && db.in_hand.count(l1) &&
               db.in_hand.count(l2) && db.has_angle.count({l1, a2}) &&
               db.grasped.count({g2, l2}) && ok_step(db.granularity, a1, a2);
    }
    if (a.name == "grasp_changeAngle_release" && v.size() == 7) {
        const int l1 = v[0], l2 = v[1], j1 = v[2], a1 = v[3], a2 = v[4], g1 = v[5],
                  g2 = v[6];
        return db.links.count(l1) && db.links.count(l2) && db.joints.count(j1) &&
               db.angles.count(a1) && db.angles.count(a2) && db.grippers.count(g1) &&
               db.grippers.count(g2) && db.centre == std::optional<int>(j1) &&
               db.free_grippers.count(g1) && db.free_grippers.count(g2) &&
               db.connected.count({j1, l1}) && db.connected.count({j1, l2}) &&
               db.has_angle.count({l1, a2}) && l1 != l2 && g1 != g2 &&
               ok_step(db.granularity, a1, a2);
    }
    return false;
}

FactDb maes_step(const FactDb& db, const GroundAction& a) {
    const auto& v = a.args;
    FactDb next = db;
    if (a.name == "linkToCentral_take") {
        const int l1 = v[0], l2 = v[1], j1 = v[2], g1 = v[3], g2 = v[4];
        next.centre = j1;
        next.in_hand.insert(l1);
        next.in_hand.insert(l2);
        next.grasped.emplace(g1, l1);
        next.grasped.emplace(g2, l2);
        next.free_grippers.erase(g1);
        next.free_grippers.erase(g2);
        return next;
    }
    if (a.name == "changeAngle_release") {
        const int l1 = v[0], l2 = v[1], g1 = v[3], g2 = v[4], a1 = v[5], a2 = v[6];
        next.has_angle = rotate_angles(db, l1, l2, a1, a2);
        next.free_grippers.insert(g1);
        next.free_grippers.insert(g2);
        next.in_hand.erase(l1);
        next.in_hand.erase(l2);
        next.grasped.erase({g1, l1});
        next.grasped.erase({g2, l2});
        return next;
    }
    if (a.name == "grasp_changeAngle_release") {
        const int l1 = v[0], l2 = v[1], a1 = v[3], a2 = v[4], g1 = v[5], g2 = v[6];
        next.has_angle = rotate_angles(db, l1, l2, a1, a2);
        next.free_grippers.insert(g1);
        next.free_grippers.insert(g2);
        next.in_hand.erase(l1);
        next.in_hand.erase(l2);
        next.grasped.erase({g1, l1});
        next.grasped.erase({g2, l2});
        return next;
    }
    throw std::logic_error("not a macro action: " + a.name);
}

} // namespace

bool action_selectable(const FactDb& db, Encoding encoding, const GroundAction& a) {
    switch (encoding) {
    case Encoding::Sas:
        return sas_selectable(db, a);
    case Encoding::Saes:
        return saes_selectable(db, a);
    case Encoding::Maes:
        return maes_selectable(db, a);
    }
    return false;
}

FactDb step(const FactDb& db, Encoding encoding, const GroundAction& a) {
    if (!action_selectable(db, encoding, a)) {
        throw std::logic_error("action body does not hold: " + a.name);
    }
    switch (encoding) {
    case Encoding::Sas:
        return sas_step(db, a);
    case Encoding::Saes:
        return saes_step(db, a);
    case Encoding::Maes:
        return maes_step(db, a);
    }
    throw std::logic_error("unreachable");
}

} // namespace artiplan::testsupport
