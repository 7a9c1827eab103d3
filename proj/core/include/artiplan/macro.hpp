#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artiplan/schema.hpp"

namespace artiplan {

/// Variable renaming applied to the first operand of a composition;
/// unmapped names carry over unchanged, so identical names unify by default.
/// Must be injective.
using VarMap = std::vector<std::pair<std::string, std::string>>;

/// One elementary operator inside a macro: the schema it instantiates and,
/// per schema parameter, the macro parameter bound to it.
struct Constituent {
    std::string schema_name;
    std::vector<std::string> arg_params;

    bool operator==(const Constituent&) const = default;
};

/// A macro operator: shaped exactly like an elementary schema, plus the
/// ordered elementary sequence it encapsulates.
struct MacroSchema {
    OperatorSchema op;
    std::vector<Constituent> constituents;
};

/// Wraps an elementary schema as a trivial one-step macro.
MacroSchema lift(const OperatorSchema& op);

struct Soundness {
    bool sound = true;
    Literal witness; // a deleted atom some later precondition requires

    explicit operator bool() const { return sound; }
};

/// Unsound when the first operator deletes (and does not add back) an atom
/// that is, after renaming, a positive precondition of the second.
Soundness check_soundness(const OperatorSchema& first, const OperatorSchema& second,
                          const VarMap& map = {});

/// Composes two operators into a macro:
///   pre = pre(first') u (pre(second) \ established(first'))
///   del = (del(first') \ add(second)) u del(second)
///   add = (add(first') \ del(second)) u add(second)
/// where first' is first renamed by `map`, and established covers both atoms
/// the first operator adds and negated atoms it deletes. Set operations
/// match literals syntactically after renaming. Throws on sort mismatches;
/// with `strict`, also on unsound pairs.
MacroSchema compose(const MacroSchema& first, const OperatorSchema& second,
                    const VarMap& map = {}, bool strict = false);
MacroSchema compose(const OperatorSchema& first, const OperatorSchema& second,
                    const VarMap& map = {}, bool strict = false);

/// Renames and reorders the composed schema to a fixed public signature.
MacroSchema with_signature(MacroSchema m, std::string name,
                           const std::vector<std::string>& param_order);

/// The Maes action vocabulary: linkToCentral_take, changeAngle_release and
/// grasp_changeAngle_release. These three macros are the only operators
/// available to Maes planning.
const std::vector<MacroSchema>& maes_action_set();

/// Replaces every macro action by its elementary sequence, renumbering
/// timesteps consecutively. The result executes under the extended
/// elementary semantics and reaches the same final state.
Plan expand(const Plan& macro_plan);

/// Ground macro instances applicable in the state, canonically ordered
/// (macro declaration order, then argument tuple). With `mixed`, the
/// elementary operators are enumerated first.
std::vector<GroundAction> applicable_macro(const State& s, const Topology& topo,
                                           bool mixed = false);

/// Applies a ground macro (or, in mixed mode, elementary) action by name.
State apply_macro(const State& s, const Topology& topo, const GroundAction& a);

} // namespace artiplan
