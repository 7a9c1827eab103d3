#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artiplan/plan.hpp"
#include "artiplan/state.hpp"
#include "artiplan/topology.hpp"

namespace artiplan {

enum class Sort { Link, Joint, Gripper, Angle };

std::string to_string(Sort s);

struct Param {
    std::string name;
    Sort sort;
    bool operator==(const Param&) const = default;
};

/// A precondition or effect template over schema parameters. Fluent
/// predicates are evaluated against a State, static ones (isLinked,
/// connected) against the Topology.
struct Literal {
    bool positive = true;
    std::string pred;
    std::vector<std::string> args; // parameter names

    bool operator==(const Literal&) const = default;
};

std::string to_string(const Literal& l);

/// Comparison guard between two parameters.
struct Guard {
    enum class Kind { NotEqual, Greater } kind = Kind::NotEqual;
    std::string a, b;

    bool operator==(const Guard&) const = default;
};

std::string to_string(const Guard& g);

/// Angle-change effect: the rotated element takes the target angle and every
/// element strictly beyond it, on the side away from the held element, is
/// shifted by the same delta. Carries its own one-step validity guard.
struct Rotation {
    std::string rotated;
    std::string held;
    std::string target;
    std::string current;

    bool operator==(const Rotation&) const = default;
};

/// A lifted planning operator: name, typed parameters, precondition
/// literals and guards, add/delete effect templates, and the optional
/// rotation effect.
struct OperatorSchema {
    std::string name;
    std::vector<Param> params;
    std::vector<Literal> pre;
    std::vector<Guard> guards;
    std::vector<Literal> add;
    std::vector<Literal> del;
    std::optional<Rotation> rotation;

    std::optional<Sort> sort_of(const std::string& var) const;
};

/// Materialized precondition set in canonical string form: one sort atom per
/// parameter, every guard, and every precondition literal, sorted. Used for
/// the set algebra equality checks.
std::vector<std::string> pre_set_strings(const OperatorSchema& s);
std::vector<std::string> effect_set_strings(const std::vector<Literal>& ls);

/// Returns the first precondition (sort, guard, literal or rotation
/// validity) the grounded arguments fail against the given state, or
/// nullopt when the ground instance is applicable.
std::optional<std::string> first_unsatisfied(const OperatorSchema& schema,
                                             const std::vector<int>& args,
                                             const State& s, const Topology& topo);

/// Applies the grounded effects: deletes, then adds, then the rotation.
/// Does not re-check preconditions.
State apply_schema(const OperatorSchema& schema, const std::vector<int>& args,
                   const State& s, const Topology& topo);

/// The chain-model rotation operator (changeAngle over joints).
const OperatorSchema& sas_change_angle_schema();

/// The four extended-model elementary operators, in canonical order:
/// move_link_to_central, take_links_to_move, changeAngle, release_links.
const std::vector<OperatorSchema>& saes_schemas();

/// Schema lookup for plan validation: resolves an action name and arity
/// against the given encoding's action vocabulary (elementary operators are
/// included for Maes only when mixed is set).
const OperatorSchema* find_schema(Encoding encoding, const std::string& name,
                                  size_t arity, bool mixed = false);

} // namespace artiplan
