#include "artiplan/topology.hpp"

#include <algorithm>

namespace artiplan {

std::string to_string(Encoding e) {
    switch (e) {
    case Encoding::Sas:
        return "sas";
    case Encoding::Saes:
        return "saes";
    case Encoding::Maes:
        return "maes";
    }
    return "?";
}

std::optional<Encoding> encoding_from_string(std::string_view s) {
    if (s == "sas") return Encoding::Sas;
    if (s == "saes") return Encoding::Saes;
    if (s == "maes") return Encoding::Maes;
    return std::nullopt;
}

bool Topology::is_joint(JointId j) const {
    return std::binary_search(joints.begin(), joints.end(), j);
}

bool Topology::is_link(LinkId l) const {
    return std::binary_search(links.begin(), links.end(), l);
}

bool Topology::is_gripper(GripperId g) const {
    return std::binary_search(grippers.begin(), grippers.end(), g);
}

bool Topology::is_linked(JointId a, JointId b) const {
    return std::binary_search(linked_joints.begin(), linked_joints.end(),
                              std::make_pair(a, b));
}

bool Topology::connected(JointId j, LinkId l) const {
    return std::binary_search(joint_links.begin(), joint_links.end(),
                              std::make_pair(j, l));
}

std::vector<LinkId> Topology::links_of(JointId j) const {
    std::vector<LinkId> out;
    for (const auto& [joint, link] : joint_links) {
        if (joint == j) {
            out.push_back(link);
        }
    }
    return out;
}

double Topology::length_of(int element) const {
    const auto& els = elements();
    auto it = std::lower_bound(els.begin(), els.end(), element);
    if (it == els.end() || *it != element) {
        return 1.0;
    }
    auto idx = static_cast<size_t>(it - els.begin());
    return idx < link_lengths.size() ? link_lengths[idx] : 1.0;
}

Topology Topology::sas_chain(int num_joints, int granularity) {
    Topology t;
    t.scenario = Encoding::Sas;
    t.granularity = granularity;
    for (int j = 1; j <= num_joints; ++j) {
        t.joints.push_back(j);
    }
    t.links = t.joints;
    t.link_lengths.assign(t.joints.size(), 1.0);
    t.linked_joints.emplace_back(0, 1);
    t.linked_joints.emplace_back(1, 0);
    for (int j = 1; j < num_joints; ++j) {
        t.linked_joints.emplace_back(j, j + 1);
        t.linked_joints.emplace_back(j + 1, j);
    }
    std::sort(t.linked_joints.begin(), t.linked_joints.end());
    return t;
}

Topology Topology::extended_chain(int num_links, int granularity,
                                  std::vector<GripperId> grippers) {
    Topology t;
    t.scenario = Encoding::Saes;
    t.granularity = granularity;
    for (int l = 1; l <= num_links; ++l) {
        t.links.push_back(l);
    }
    for (int j = 1; j < num_links; ++j) {
        t.joints.push_back(j);
        t.joint_links.emplace_back(j, j);
        t.joint_links.emplace_back(j, j + 1);
    }
    std::sort(t.joint_links.begin(), t.joint_links.end());
    t.grippers = std::move(grippers);
    std::sort(t.grippers.begin(), t.grippers.end());
    t.link_lengths.assign(t.links.size(), 1.0);
    return t;
}

} // namespace artiplan
