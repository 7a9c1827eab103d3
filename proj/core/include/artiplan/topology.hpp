#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artiplan/angle.hpp"

namespace artiplan {

using JointId = int;
using LinkId = int;
using GripperId = int;

/// The three action models. Sas plans rotate joints of a chain anchored to a
/// hidden reference joint 0; Saes adds grippers, grasping and workspace
/// centering over links; Maes plans with the three macro operators only.
enum class Encoding { Sas, Saes, Maes };

std::string to_string(Encoding e);
std::optional<Encoding> encoding_from_string(std::string_view s);

/// True for the two gripper-based models that share the extended instance
/// shape (link/connected facts).
constexpr bool is_extended(Encoding e) {
    return e != Encoding::Sas;
}

/// Static structure of the articulated object: element ids, adjacency,
/// angular granularity and (render-only) link lengths.
///
/// Sas instances declare joints only; each joint carries the orientation of
/// one link, and the hidden reference joint 0 (always at angle 0, linked to
/// joint 1) is implicit rather than stored. Extended instances declare links
/// 1..n and joints 1..n-1, with `connected` mapping each joint to the two
/// links it articulates.
struct Topology {
    Encoding scenario = Encoding::Sas;
    std::vector<JointId> joints;                      // declared, sorted
    std::vector<LinkId> links;                        // extended; Sas: == joints
    std::vector<GripperId> grippers;                  // extended only
    int granularity = 90;
    std::vector<double> link_lengths;                 // parallel to elements()
    std::vector<std::pair<JointId, JointId>> linked_joints; // Sas, symmetric, incl. (0,1)
    std::vector<std::pair<JointId, LinkId>> joint_links;    // extended, sorted, deduped

    /// Ids whose orientation makes up a configuration: joints in Sas,
    /// links in the extended models.
    const std::vector<int>& elements() const {
        return scenario == Encoding::Sas ? joints : links;
    }

    int orientations() const { return granularity > 0 ? 360 / granularity : 0; }

    bool is_joint(JointId j) const;
    bool is_link(LinkId l) const;
    bool is_gripper(GripperId g) const;
    bool is_linked(JointId a, JointId b) const;       // Sas adjacency
    bool connected(JointId j, LinkId l) const;        // extended adjacency
    std::vector<LinkId> links_of(JointId j) const;

    double length_of(int element) const;

    /// Sas chain of n joints (ids 1..n), consecutive joints linked.
    static Topology sas_chain(int num_joints, int granularity);
    /// Extended chain of n links (ids 1..n), joint j connecting links j and
    /// j+1, with the given gripper ids.
    static Topology extended_chain(int num_links, int granularity,
                                   std::vector<GripperId> grippers);
};

} // namespace artiplan
