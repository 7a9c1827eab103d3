#include "artiplan/transition_saes.hpp"

#include <algorithm>
#include <stdexcept>

namespace artiplan {

namespace {

struct GroundVisitor {
    int t;
    GroundAction operator()(const MoveLinkToCentral& a) const {
        return {"move_link_to_central", {a.link, a.joint, a.gripper}, t};
    }
    GroundAction operator()(const TakeLinksToMove& a) const {
        return {"take_links_to_move", {a.l1, a.l2, a.joint, a.g1, a.g2}, t};
    }
    GroundAction operator()(const SaesChangeAngle& a) const {
        return {"changeAngle", {a.l1, a.l2, a.joint, a.target, a.current, a.g1, a.g2}, t};
    }
    GroundAction operator()(const ReleaseLinks& a) const {
        return {"release_links", {a.l1, a.l2, a.joint, a.g1, a.g2}, t};
    }
};

std::vector<JointId> joints_connecting(const Topology& topo, LinkId a, LinkId b) {
    std::vector<JointId> out;
    for (JointId j : topo.joints) {
        if (topo.connected(j, a) && topo.connected(j, b)) {
            out.push_back(j);
        }
    }
    return out;
}

} // namespace

GroundAction to_ground(const SaesAction& a, int timestep) {
    return std::visit(GroundVisitor{timestep}, a);
}

std::optional<SaesAction> saes_from_ground(const GroundAction& a) {
    const auto& v = a.args;
    if (a.name == "move_link_to_central" && v.size() == 3) {
        return SaesAction{MoveLinkToCentral{v[0], v[1], v[2]}};
    }
    if (a.name == "take_links_to_move" && v.size() == 5) {
        return SaesAction{TakeLinksToMove{v[0], v[1], v[2], v[3], v[4]}};
    }
    if (a.name == "changeAngle" && v.size() == 7) {
        return SaesAction{SaesChangeAngle{v[0], v[1], v[2], v[3], v[4], v[5], v[6]}};
    }
    if (a.name == "release_links" && v.size() == 5) {
        return SaesAction{ReleaseLinks{v[0], v[1], v[2], v[3], v[4]}};
    }
    return std::nullopt;
}

std::vector<SaesAction> applicable_saes(const State& s, const Topology& topo) {
    std::vector<SaesAction> out;

    // move_link_to_central, ordered by (link, joint, gripper)
    {
        std::vector<MoveLinkToCentral> block;
        for (const auto& [j1, l1] : topo.joint_links) {
            if (s.in_centre && *s.in_centre == j1) {
                continue;
            }
            if (s.in_hand(l1)) {
                continue;
            }
            for (GripperId g2 : s.free_grippers) {
                block.push_back(MoveLinkToCentral{l1, j1, g2});
            }
        }
        std::sort(block.begin(), block.end(),
                  [](const MoveLinkToCentral& a, const MoveLinkToCentral& b) {
                      return std::tie(a.link, a.joint, a.gripper) <
                             std::tie(b.link, b.joint, b.gripper);
                  });
        for (auto& a : block) {
            out.emplace_back(a);
        }
    }

    // take_links_to_move at the centred joint
    if (s.in_centre) {
        const JointId j1 = *s.in_centre;
        std::vector<TakeLinksToMove> block;
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
                        if (g1 != g2) {
                            block.push_back(TakeLinksToMove{l1, l2, j1, g1, g2});
                        }
                    }
                }
            }
        }
        std::sort(block.begin(), block.end(),
                  [](const TakeLinksToMove& a, const TakeLinksToMove& b) {
                      return std::tie(a.l1, a.l2, a.g1, a.g2) <
                             std::tie(b.l1, b.l2, b.g1, b.g2);
                  });
        for (auto& a : block) {
            out.emplace_back(a);
        }
    }

    // changeAngle over the grasped pair around the centred joint
    if (s.in_centre) {
        const JointId j1 = *s.in_centre;
        std::vector<SaesChangeAngle> block;
        for (const State::Grasp& ga : s.grasps) {
            for (const State::Grasp& gb : s.grasps) {
                if (ga.gripper == gb.gripper || ga.link == gb.link) {
                    continue;
                }
                if (!topo.connected(j1, ga.link) || !topo.connected(j1, gb.link)) {
                    continue;
                }
                const Angle current = s.angle_of(ga.link);
                Angle targets[2] = {normalize_angle(current - topo.granularity),
                                    normalize_angle(current + topo.granularity)};
                std::sort(std::begin(targets), std::end(targets));
                for (int k = 0; k < 2; ++k) {
                    if (k == 1 && targets[1] == targets[0]) {
                        break;
                    }
                    if (targets[k] == current) {
                        continue;
                    }
                    block.push_back(SaesChangeAngle{ga.link, gb.link, j1, targets[k],
                                                    current, ga.gripper, gb.gripper});
                }
            }
        }
        std::sort(block.begin(), block.end(),
                  [](const SaesChangeAngle& a, const SaesChangeAngle& b) {
                      return std::tie(a.l1, a.l2, a.target, a.g1) <
                             std::tie(b.l1, b.l2, b.target, b.g1);
                  });
        for (auto& a : block) {
            out.emplace_back(a);
        }
    }

    // release_links for any grasped pair sharing a joint
    {
        std::vector<ReleaseLinks> block;
        for (const State::Grasp& ga : s.grasps) {
            for (const State::Grasp& gb : s.grasps) {
                if (ga.gripper == gb.gripper || ga.link == gb.link) {
                    continue;
                }
                for (JointId j1 : joints_connecting(topo, ga.link, gb.link)) {
                    block.push_back(
                        ReleaseLinks{ga.link, gb.link, j1, ga.gripper, gb.gripper});
                }
            }
        }
        std::sort(block.begin(), block.end(),
                  [](const ReleaseLinks& a, const ReleaseLinks& b) {
                      return std::tie(a.l1, a.l2, a.joint, a.g1) <
                             std::tie(b.l1, b.l2, b.joint, b.g1);
                  });
        for (auto& a : block) {
            out.emplace_back(a);
        }
    }
    return out;
}

namespace {

struct ReasonVisitor {
    const State& s;
    const Topology& topo;

    std::optional<std::string> operator()(const MoveLinkToCentral& a) const {
        if (!topo.connected(a.joint, a.link)) {
            return "joint " + std::to_string(a.joint) + " is not connected to link " +
                   std::to_string(a.link);
        }
        if (!s.is_free(a.gripper)) {
            return "gripper " + std::to_string(a.gripper) + " is not free";
        }
        if (s.in_hand(a.link)) {
            return "link " + std::to_string(a.link) + " is in hand";
        }
        if (s.in_centre && *s.in_centre == a.joint) {
            return "joint " + std::to_string(a.joint) + " is already centred";
        }
        return std::nullopt;
    }

    std::optional<std::string> pair_checks(LinkId l1, LinkId l2, JointId j,
                                           GripperId g1, GripperId g2) const {
        if (l1 == l2) {
            return "the two links must differ";
        }
        if (g1 == g2) {
            return "the two grippers must differ";
        }
        if (!topo.connected(j, l1) || !topo.connected(j, l2)) {
            return "joint " + std::to_string(j) + " does not connect links " +
                   std::to_string(l1) + " and " + std::to_string(l2);
        }
        return std::nullopt;
    }

    std::optional<std::string> operator()(const TakeLinksToMove& a) const {
        if (auto r = pair_checks(a.l1, a.l2, a.joint, a.g1, a.g2)) {
            return r;
        }
        if (!(s.in_centre && *s.in_centre == a.joint)) {
            return "joint " + std::to_string(a.joint) + " is not centred";
        }
        if (!s.is_free(a.g1) || !s.is_free(a.g2)) {
            return "both grippers must be free";
        }
        if (s.in_hand(a.l1) || s.in_hand(a.l2)) {
            return "links must not already be in hand";
        }
        return std::nullopt;
    }

    std::optional<std::string> grasp_checks(LinkId l1, LinkId l2, GripperId g1,
                                            GripperId g2) const {
        if (s.grasp_of(g1) != std::optional<LinkId>(l1)) {
            return "gripper " + std::to_string(g1) + " does not grasp link " +
                   std::to_string(l1);
        }
        if (s.grasp_of(g2) != std::optional<LinkId>(l2)) {
            return "gripper " + std::to_string(g2) + " does not grasp link " +
                   std::to_string(l2);
        }
        if (!s.in_hand(l1) || !s.in_hand(l2)) {
            return "both links must be in hand";
        }
        if (s.is_free(g1) || s.is_free(g2)) {
            return "grippers must be occupied";
        }
        return std::nullopt;
    }

    std::optional<std::string> operator()(const SaesChangeAngle& a) const {
        if (auto r = pair_checks(a.l1, a.l2, a.joint, a.g1, a.g2)) {
            return r;
        }
        if (!(s.in_centre && *s.in_centre == a.joint)) {
            return "joint " + std::to_string(a.joint) + " is not centred";
        }
        if (auto r = grasp_checks(a.l1, a.l2, a.g1, a.g2)) {
            return r;
        }
        if (s.angle_of(a.l1) != a.current) {
            return "link " + std::to_string(a.l1) + " is not at angle " +
                   std::to_string(a.current);
        }
        if (!one_step_apart(topo.granularity, a.target, a.current)) {
            return "angle change " + std::to_string(a.current) + " -> " +
                   std::to_string(a.target) + " is not a single granularity step";
        }
        return std::nullopt;
    }

    std::optional<std::string> operator()(const ReleaseLinks& a) const {
        if (auto r = pair_checks(a.l1, a.l2, a.joint, a.g1, a.g2)) {
            return r;
        }
        return grasp_checks(a.l1, a.l2, a.g1, a.g2);
    }
};

struct ApplyVisitor {
    State next;
    const Topology& topo;

    State operator()(const MoveLinkToCentral& a) {
        next.in_centre = a.joint;
        return std::move(next);
    }
    State operator()(const TakeLinksToMove& a) {
        next.add_grasp(a.g1, a.l1);
        next.add_grasp(a.g2, a.l2);
        return std::move(next);
    }
    State operator()(const SaesChangeAngle& a) {
        rotate_and_propagate(next, topo, a.l1, a.l2, a.target, a.current);
        return std::move(next);
    }
    State operator()(const ReleaseLinks& a) {
        next.release_grasp(a.g1);
        next.release_grasp(a.g2);
        return std::move(next);
    }
};

} // namespace

std::optional<std::string> saes_inapplicable_reason(const State& s,
                                                    const Topology& topo,
                                                    const SaesAction& a) {
    return std::visit(ReasonVisitor{s, topo}, a);
}

State apply_saes(const State& s, const Topology& topo, const SaesAction& a) {
    if (auto reason = saes_inapplicable_reason(s, topo, a)) {
        throw std::invalid_argument("inapplicable action: " + *reason);
    }
    return std::visit(ApplyVisitor{s, topo}, a);
}

} // namespace artiplan
